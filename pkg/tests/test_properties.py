from hypothesis import given, settings
from hypothesis import strategies as st

from genus3.chowcurve import (
    BaseCurve,
    DivisorClass,
    ProjBundleModel,
    SplittingType,
    h0_sym2_twist,
    multiply_classes,
    quadric_invariants,
    reduce_element,
    top_degree,
    truncation_positivity,
)
from genus3.surflat import (
    RuledModel,
    WeightSequence,
    blow_up,
    make_ruled,
    minimalization_invariants,
    pair,
    sectional_genus_surface,
)
from genus3.tablecli import naive_product, naive_top_degree

bundles = st.builds(
    ProjBundleModel,
    base=st.builds(BaseCurve, genus=st.integers(0, 2)),
    rank=st.integers(2, 6),
    c1=st.integers(-6, 6),
)
divisors = st.builds(DivisorClass, h=st.integers(-5, 5), f=st.integers(-5, 5))

splittings = st.lists(st.integers(-4, 4), min_size=2, max_size=6).map(
    lambda xs: SplittingType(tuple(sorted(xs)))
)


@given(bundles, st.lists(divisors, min_size=1, max_size=6), st.randoms(use_true_random=False))
def test_multiply_is_permutation_invariant(bundle, factors, rng):
    shuffled = list(factors)
    rng.shuffle(shuffled)
    assert multiply_classes(bundle, shuffled) == multiply_classes(bundle, factors)


@given(bundles, st.lists(divisors, min_size=1, max_size=6))
def test_multiply_matches_naive_oracle(bundle, factors):
    ring = multiply_classes(bundle, factors)
    oracle = naive_product(bundle.rank, bundle.c1, [(d.h, d.f) for d in factors])
    assert dict(ring.coefficients) == oracle


@given(bundles, st.lists(divisors, min_size=2, max_size=5), st.integers(1, 4))
def test_multiply_is_associative(bundle, factors, cut):
    # multiplying the two reduced half-products agrees with the flat product
    cut = min(cut, len(factors) - 1)
    left = multiply_classes(bundle, factors[:cut])
    right = multiply_classes(bundle, factors[cut:])
    combined: dict[tuple[int, int], int] = {}
    for (i1, j1), c1 in left.coefficients.items():
        for (i2, j2), c2 in right.coefficients.items():
            key = (i1 + i2, j1 + j2)
            combined[key] = combined.get(key, 0) + c1 * c2
    assert reduce_element(bundle, combined) == multiply_classes(bundle, factors)


@given(
    st.integers(0, 2),
    st.integers(-6, 6),
    st.integers(-6, 6),
    st.integers(3, 7),
)
def test_quadric_closed_forms_match_ring(g_c, e, b, rank):
    bundle = ProjBundleModel(BaseCurve(g_c), rank, e)
    closed = quadric_invariants(bundle, b)
    member = [(2, b)]
    assert closed.d == naive_top_degree(rank, e, [(1, 0)] * (rank - 1) + member)
    adjoint = (-rank + 2 + rank - 2, 2 * g_c - 2 + e + b)
    assert 2 * closed.g - 2 == naive_top_degree(
        rank, e, [adjoint] + [(1, 0)] * (rank - 2) + member
    )


@given(st.integers(0, 1), st.integers(3, 6), st.integers(-6, 6), st.integers(-6, 6))
def test_corrected_relation_at_genus_three(g_c, n, e, b):
    bundle = ProjBundleModel(BaseCurve(g_c), n + 1, e)
    inv = quadric_invariants(bundle, b)
    if inv.g == 3:
        assert (n - 1) * inv.d + inv.s + 4 * n * g_c == 8 * n


@given(splittings, st.integers(-5, 5), st.integers(-2, 2))
def test_h0_sym2_twist_monotone(splitting, t, bump):
    base = h0_sym2_twist(splitting, t)
    assert h0_sym2_twist(splitting, t + 1) >= base
    index = len(splitting) - 1
    raised = SplittingType(splitting.degrees[:index] + (splitting.degrees[index] + abs(bump),))
    assert h0_sym2_twist(raised, t) >= base


@given(splittings, st.integers(-4, 4), st.data())
def test_truncation_number_matches_ring(splitting, b, data):
    n = len(splitting) - 1
    if n < 2:
        return
    k = data.draw(st.integers(2, n))
    bundle = ProjBundleModel(
        BaseCurve(0), len(splitting), splitting.c1, splitting
    )
    factors = (
        [DivisorClass(1, 0)] * (n - k)
        + [DivisorClass(2, b)]
        + [DivisorClass(1, -e) for e in splitting.degrees[-k:]]
    )
    ring_value = top_degree(bundle, multiply_classes(bundle, factors))
    assert truncation_positivity(splitting, b, k).number == ring_value


ruled_instances = st.tuples(
    st.integers(0, 2),  # base genus
    st.integers(-3, 3),  # e
    st.integers(-6, 6),  # x
    st.integers(-6, 6),  # y
    st.lists(st.integers(1, 5), max_size=5),  # weights
)


@settings(max_examples=200)
@given(ruled_instances)
def test_minimalization_matches_lattice_route(instance):
    genus, e, x, y, weight_list = instance
    weights = WeightSequence(tuple(weight_list))
    lattice = make_ruled(RuledModel(genus, e)).with_polarization((x, y))
    aa_min = pair(lattice, lattice.A, lattice.A)
    ka_min = pair(lattice, lattice.K, lattice.A)
    kk_min = pair(lattice, lattice.K, lattice.K)
    closed = minimalization_invariants(
        sectional_genus_surface(ka_min, aa_min), aa_min, kk_min, weights
    )
    blown = blow_up(lattice, weights)
    assert pair(blown, blown.A, blown.A) == closed.AA
    assert pair(blown, blown.K, blown.K) == closed.KK
    assert (
        sectional_genus_surface(
            pair(blown, blown.K, blown.A), pair(blown, blown.A, blown.A)
        )
        == closed.g
    )


@given(st.integers(1, 7))
def test_genus_drop_of_single_contraction(m):
    result = minimalization_invariants(0, 0, 0, WeightSequence((m,)))
    assert -result.g == m * (m - 1) // 2
    assert -result.AA == m * m


@given(
    st.integers(0, 2),
    st.integers(-3, 3),
    st.lists(st.integers(1, 4), min_size=1, max_size=4),
    st.tuples(st.integers(-4, 4), st.integers(-4, 4)),
    st.tuples(st.integers(-4, 4), st.integers(-4, 4)),
)
def test_blow_up_preserves_pullback_pairing(genus, e, weight_list, d1, d2):
    lattice = make_ruled(RuledModel(genus, e)).with_polarization((1, 1))
    blown = blow_up(lattice, WeightSequence(tuple(weight_list)))
    pad = (0,) * len(weight_list)
    assert pair(blown, d1 + pad, d2 + pad) == pair(lattice, d1, d2)
