"""Acceptance gate: one test per criterion, every comparison exact.

Run with ``pytest tests/test_acceptance.py -v`` for one line per criterion
(add ``-s`` to also see the PASS prints).
"""

import json
import random

from genus3 import classify, surflat, tablecli
from genus3.chowcurve import (
    BaseCurve,
    DivisorClass,
    ProjBundleModel,
    SplittingType,
    canonical_class,
    h0_sym2_twist,
    multiply_classes,
    quadric_invariants,
    top_degree,
    veronese_invariants,
)

H = DivisorClass(1, 0)


def bundled_rows(table):
    return tablecli.load_fixture(tablecli.packaged_fixture_path(table))


def test_criterion_01_closed_forms_match_ring_on_grid():
    points = 0
    for g_c in (0, 1, 2):
        for rank in range(3, 8):
            for e in range(-6, 7):
                bundle = ProjBundleModel(BaseCurve(g_c), rank, e)
                k_class = canonical_class(bundle)
                for b in range(-6, 7):
                    points += 1
                    closed = quadric_invariants(bundle, b)
                    member = DivisorClass(2, b)
                    d_ring = top_degree(
                        bundle, multiply_classes(bundle, [H] * (rank - 1) + [member])
                    )
                    adjoint = k_class + member + (rank - 2) * H
                    g2_ring = top_degree(
                        bundle,
                        multiply_classes(bundle, [adjoint] + [H] * (rank - 2) + [member]),
                    )
                    assert closed.d == 2 * e + b == d_ring
                    assert 2 * closed.g - 2 == 2 * (2 * g_c - 2 + e + b) == g2_ring
    assert points >= 2000
    print(f"ACCEPTANCE 1: PASS - closed forms match the ring on {points} grid points exactly")


def test_criterion_02_identity_correction():
    checked = 0
    for g_c in (0, 1, 2):
        for rank in range(4, 8):
            n = rank - 1
            for e in range(-6, 7):
                bundle = ProjBundleModel(BaseCurve(g_c), rank, e)
                for b in range(-6, 7):
                    inv = quadric_invariants(bundle, b)
                    if inv.g == 3:
                        checked += 1
                        assert (n - 1) * inv.d + inv.s + 4 * n * g_c == 8 * n
    assert checked > 0
    # the (n+1)-coefficient variant fails at (n, d, g_C) = (3, 8, 0)
    bundle = ProjBundleModel(BaseCurve(0), 4, 4)
    inv = quadric_invariants(bundle, 0)
    assert (inv.d, inv.g) == (8, 3)
    assert 4 * inv.d + inv.s + 0 == 40 != 24
    report = tablecli.oracle_selftest()
    featured = report.variant_identity_counterexamples[0]
    assert (featured.n, featured.d, featured.g_C, featured.lhs, featured.rhs) == (3, 8, 0, 40, 24)
    assert "n=3 d=8 g(C)=0" in report.to_text()
    assert report.corrected_identity_failures == 0
    print(
        "ACCEPTANCE 2: PASS - corrected relation holds at all "
        f"{checked} genus-3 grid points; variant fails at n=3 d=8 g(C)=0 (40 != 24)"
    )


def test_criterion_03_table_reproduction():
    rows = bundled_rows("3.25")
    by_d = {}
    for row in rows:
        by_d.setdefault(row.params["d"], set()).add(tuple(row.params["splitting"]))
    for d in range(4, 13):
        admitted = set(classify.admitted_splittings(classify.enumerate_quadric_splittings(d)))
        assert admitted == by_d[d], f"d={d}: {admitted} != {by_d[d]}"
    assert by_d[7] == {(0, 0, 1, 2), (0, 1, 1, 1), (0, 0, 1, 1, 1)}
    assert by_d[12] == {(1, 1, 3, 3), (1, 2, 2, 3), (2, 2, 2, 2)}
    for d in (1, 2, 3):
        table = {s: "The existence is uncertain." for s in by_d[d]}
        candidates = classify.enumerate_quadric_splittings(d, paper_rows=table)
        admitted = {c.splitting: c for c in candidates if c.status == "admitted"}
        assert by_d[d] <= set(admitted)
        for splitting, cand in admitted.items():
            if splitting not in by_d[d]:
                assert cand.beyond_paper, f"unflagged extra {splitting} at d={d}"
    print("ACCEPTANCE 3: PASS - splitting table reproduced exactly for d in [4,12], "
          "flagged superset for d in [1,3]")


def test_criterion_04_obstruction_rules():
    eleven = {c.splitting: c for c in classify.enumerate_quadric_splittings(11)}
    twelve = {c.splitting: c for c in classify.enumerate_quadric_splittings(12)}
    assert eleven[(1, 1, 1, 4)].rule.rule == "corank1-empty"
    assert twelve[(1, 1, 1, 5)].rule.rule == "corank1-empty"
    trace = eleven[(1, 1, 2, 3)].rule
    assert trace.rule == "normal-obstruction" and "c + p + q = 1" in trace.detail
    assert twelve[(1, 1, 2, 4)].rule.rule == "normal-obstruction"
    assert "h^0 = 0" in twelve[(1, 1, 2, 4)].rule.detail
    for splitting, table in (((1, 2, 2, 2), eleven), ((1, 1, 3, 3), twelve), ((1, 2, 2, 3), twelve)):
        assert table[splitting].status == "admitted"
    print("ACCEPTANCE 4: PASS - obstruction rules exclude/admit the degree-11 and "
          "degree-12 candidates exactly as published")


def test_criterion_05_cohomology_counts():
    assert h0_sym2_twist(SplittingType((1, 2, 2, 2)), -3) == 15
    assert h0_sym2_twist(SplittingType((1, 2, 2, 3)), -4) == 11
    print("ACCEPTANCE 5: PASS - twisted symmetric-square section counts are 15 and 11")


def test_criterion_06_pushforward_degree():
    bundle = ProjBundleModel(BaseCurve(0), 4, 6)
    factors = [H - DivisorClass(0, 1)] * 3 + [DivisorClass(2, -2)]
    assert top_degree(bundle, multiply_classes(bundle, factors)) == 4
    print("ACCEPTANCE 6: PASS - (H-F)^3 (2H-2F) = 4 on the rank-4, c1 = 6 bundle")


def test_criterion_07_veronese_solver():
    solutions = classify.veronese_solutions()
    assert {(s.g_C, s.e, s.b, s.d) for s in solutions} == {(0, 0, 1, 12), (1, 2, -1, 4)}
    for s in solutions:
        bundle = ProjBundleModel(BaseCurve(s.g_C), 3, s.e)
        ring = veronese_invariants(bundle, s.b)
        assert ring.g == 3 and ring.d == s.d
    print("ACCEPTANCE 7: PASS - Veronese parameter solutions are exactly "
          "(0,0,1,12) and (1,2,-1,4), ring-verified at genus 3")


def test_criterion_08_surface_table_verification():
    rows = bundled_rows("2.3")
    report = tablecli.verify("2.3", rows)
    assert report.exit_status == 0
    verdicts = {v.key: v for v in report.verdicts}
    assert len(verdicts) == 32
    flagged = [v for v in report.verdicts if v.verdict == "discrepancy"]
    assert len(flagged) == 1 and flagged[0].key == "VII-3/e=1" and flagged[0].whitelisted
    for key, verdict in verdicts.items():
        if key != "VII-3/e=1":
            assert verdict.verdict == "verified", key
    stripped = []
    for row in rows:
        params = dict(row.params)
        params.pop("expect_discrepancy", None)
        stripped.append(tablecli.ClassificationRow(table=row.table, key=row.key, params=params))
    assert tablecli.verify("2.3", stripped).exit_status == 1
    print("ACCEPTANCE 8: PASS - surface table recomputes (g, A^2) on all rows; "
          "VII-3/e=1 is a whitelisted discrepancy (exit 0 with whitelist, 1 without)")


def test_criterion_09_reduction_arithmetic():
    record = classify.reduction_tuples()
    assert record.general_type_tuples == ((1, 1, 2), (1, 2, 3), (1, 3, 4), (2, 2, 4), (3, 1, 4))
    assert record.veronese_blowup_bound == 3
    assert classify.delta_bounds().d_range == range(1, 5)
    rows = surflat.deg_t_enumeration()
    assert [(r.degT, r.degG, r.c2, r.L3) for r in rows] == [
        (1, 0, 2, 4),
        (2, -1, 3, 3),
        (3, -2, 4, 2),
        (4, -3, 5, 1),
    ]
    print("ACCEPTANCE 9: PASS - reduction tuples, blow-up bound 3, degree window [1,4] "
          "and the four quotient-degree rows reproduce exactly")


def test_criterion_10_property_suites(tmp_path):
    rng = random.Random(20240811)
    # blow-up lattice arithmetic vs closed-form minimalization, 100 instances
    for _ in range(100):
        genus, e = rng.randint(0, 2), rng.randint(-3, 3)
        x, y = rng.randint(-6, 6), rng.randint(-6, 6)
        weights = surflat.WeightSequence(tuple(rng.randint(1, 5) for _ in range(rng.randint(0, 5))))
        lattice = surflat.make_ruled(surflat.RuledModel(genus, e)).with_polarization((x, y))
        aa = surflat.pair(lattice, lattice.A, lattice.A)
        ka = surflat.pair(lattice, lattice.K, lattice.A)
        kk = surflat.pair(lattice, lattice.K, lattice.K)
        closed = surflat.minimalization_invariants(
            surflat.sectional_genus_surface(ka, aa), aa, kk, weights
        )
        blown = surflat.blow_up(lattice, weights)
        assert surflat.pair(blown, blown.A, blown.A) == closed.AA
        assert surflat.pair(blown, blown.K, blown.K) == closed.KK
        blown_g = surflat.sectional_genus_surface(
            surflat.pair(blown, blown.K, blown.A), surflat.pair(blown, blown.A, blown.A)
        )
        assert blown_g == closed.g
    # canonical form is permutation invariant, 100 random factor lists
    for _ in range(100):
        bundle = ProjBundleModel(
            BaseCurve(rng.randint(0, 2)), rng.randint(2, 6), rng.randint(-6, 6)
        )
        factors = [
            DivisorClass(rng.randint(-5, 5), rng.randint(-5, 5))
            for _ in range(rng.randint(1, 6))
        ]
        shuffled = list(factors)
        rng.shuffle(shuffled)
        assert multiply_classes(bundle, shuffled) == multiply_classes(bundle, factors)
    # fixture round-trip is lossless
    for table in tablecli.TABLE_IDS:
        rows = bundled_rows(table)
        out = tmp_path / f"rt_{table}.json"
        tablecli.write_fixture(out, rows)
        assert tablecli.load_fixture(out) == rows
    print("ACCEPTANCE 10: PASS - 100-instance blow-up/minimalization agreement, "
          "100-instance permutation invariance, lossless fixture round-trips")


def test_acceptance_runs_are_fast_and_exact():
    # sanity guard for the whole gate: the self-test grid is exact
    report = tablecli.oracle_selftest()
    assert report.passed and report.max_deviation == 0
    payload = json.loads(report.to_json())
    assert payload["grid_mismatches"] == 0
    print("ACCEPTANCE: self-test grid exact (max deviation 0)")
