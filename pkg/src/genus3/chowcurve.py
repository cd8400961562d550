"""Exact intersection arithmetic on projectivized bundles over a smooth curve.

A rank-r bundle E on a curve C gives P = P(E), whose Chow ring is generated
by the tautological class H and the fibre class F (pullback of a point)
subject to

    F^2 = 0    and    H^r = c1(E) * H^(r-1) * F,

normalised so that the integral of H^(r-1)*F over P is 1, hence the
integral of H^r is c1(E).  Everything here is exact integer arithmetic in
that quotient ring, plus the h^0 counts and positivity / obstruction
numbers on split bundles over the projective line that the genus-three
classification engines consume.

Python integers never wrap, so products of classes are exact for any
coefficient size.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping, Sequence


@dataclass(frozen=True)
class BaseCurve:
    """A smooth projective curve, carried only through its genus."""

    genus: int

    def __post_init__(self) -> None:
        if self.genus < 0:
            raise ValueError(f"curve genus must be non-negative, got {self.genus}")


@dataclass(frozen=True)
class SplittingType:
    """Sorted degree list (e_0 <= ... <= e_n) of a split bundle on P^1."""

    degrees: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "degrees", tuple(int(d) for d in self.degrees))
        if len(self.degrees) < 2:
            raise ValueError("a splitting type needs at least two summands")
        if any(a > b for a, b in zip(self.degrees, self.degrees[1:])):
            raise ValueError(f"degrees must be nondecreasing, got {self.degrees}")

    @property
    def c1(self) -> int:
        return sum(self.degrees)

    def __len__(self) -> int:
        return len(self.degrees)

    def __iter__(self) -> Iterator[int]:
        return iter(self.degrees)

    def __getitem__(self, i: int) -> int:
        return self.degrees[i]

    def drop(self, index: int) -> tuple[int, ...]:
        """Degrees of the corank-one subbundle omitting ``index``."""
        return self.degrees[:index] + self.degrees[index + 1 :]


@dataclass(frozen=True)
class ProjBundleModel:
    """Numerical model of P(E) for a bundle E on a curve.

    ``rank`` is the rank of E (so dim P(E) = rank and the fibre dimension
    is n = rank - 1), ``c1`` its first Chern number.  A splitting type may
    be attached when the base is rational; splitting-dependent operations
    require it.
    """

    base: BaseCurve
    rank: int
    c1: int
    splitting: SplittingType | None = None

    def __post_init__(self) -> None:
        if self.rank < 2:
            raise ValueError(f"rank must be at least 2, got {self.rank}")
        if self.splitting is not None:
            if self.base.genus != 0:
                raise ValueError("split bundles are only modelled over a rational base")
            if len(self.splitting) != self.rank:
                raise ValueError(
                    f"splitting has {len(self.splitting)} summands, rank is {self.rank}"
                )
            if self.splitting.c1 != self.c1:
                raise ValueError(
                    f"splitting degrees sum to {self.splitting.c1}, c1 is {self.c1}"
                )

    @classmethod
    def split(cls, degrees: Sequence[int]) -> "ProjBundleModel":
        """Model of a split bundle over the projective line."""
        st = SplittingType(tuple(degrees))
        return cls(base=BaseCurve(0), rank=len(st), c1=st.c1, splitting=st)

    @property
    def n(self) -> int:
        """Fibre dimension of the bundle map (rank - 1)."""
        return self.rank - 1


@dataclass(frozen=True)
class DivisorClass:
    """Integer class h*H + f*F on P(E)."""

    h: int
    f: int

    def __add__(self, other: "DivisorClass") -> "DivisorClass":
        return DivisorClass(self.h + other.h, self.f + other.f)

    def __sub__(self, other: "DivisorClass") -> "DivisorClass":
        return DivisorClass(self.h - other.h, self.f - other.f)

    def __neg__(self) -> "DivisorClass":
        return DivisorClass(-self.h, -self.f)

    def __mul__(self, k: int) -> "DivisorClass":
        return DivisorClass(self.h * k, self.f * k)

    __rmul__ = __mul__


H = DivisorClass(1, 0)
F = DivisorClass(0, 1)


@dataclass(frozen=True, eq=False)
class ChowElement:
    """Reduced integer combination of monomials H^i * F^j, j <= 1.

    Canonical form: no monomial of degree above dim P(E) = rank, no key
    (rank, 0) (rewritten through the defining relation), no zero
    coefficients.  Equality is coefficient-wise.
    """

    coefficients: Mapping[tuple[int, int], int]

    def __post_init__(self) -> None:
        object.__setattr__(
            self,
            "coefficients",
            {key: c for key, c in self.coefficients.items() if c != 0},
        )

    def coefficient(self, i: int, j: int) -> int:
        return self.coefficients.get((i, j), 0)

    def is_zero(self) -> bool:
        return not self.coefficients

    def degrees(self) -> set[int]:
        return {i + j for (i, j) in self.coefficients}

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ChowElement):
            return NotImplemented
        return dict(self.coefficients) == dict(other.coefficients)

    def __repr__(self) -> str:
        if not self.coefficients:
            return "ChowElement(0)"
        parts = []
        for (i, j), c in sorted(self.coefficients.items()):
            mono = "*".join(["H"] * min(i, 1) + ["F"] * j) or "1"
            head = f"H^{i}" if i > 1 else mono.split("*")[0] if i else ""
            tail = "*F" if j else ""
            parts.append(f"{c}*{head or '1'}{tail}")
        return f"ChowElement({' + '.join(parts)})"


def _accumulate(acc: dict[tuple[int, int], int], i: int, j: int, c: int, rank: int, e: int) -> None:
    # F^2 = 0; H^rank = e * H^(rank-1) * F; degree above rank dies.
    if c == 0 or j >= 2:
        return
    if i >= rank:
        if i == rank and j == 0:
            _accumulate(acc, rank - 1, 1, c * e, rank, e)
        return
    if i + j > rank:
        return
    acc[(i, j)] = acc.get((i, j), 0) + c


def reduce_element(bundle: ProjBundleModel, terms: Mapping[tuple[int, int], int]) -> ChowElement:
    """Canonical form of an arbitrary integer combination of H^i * F^j."""
    acc: dict[tuple[int, int], int] = {}
    for (i, j), c in terms.items():
        if i < 0 or j < 0:
            raise ValueError(f"monomial exponents must be non-negative, got {(i, j)}")
        _accumulate(acc, i, j, c, bundle.rank, bundle.c1)
    return ChowElement(acc)


def multiply_classes(bundle: ProjBundleModel, factors: Sequence[DivisorClass]) -> ChowElement:
    """Reduced product of divisor classes in the Chow ring of P(E).

    The product is expanded factor by factor with eager reduction, so the
    result is always in canonical form.  Commutative and associative by
    construction.
    """
    if not factors:
        raise ValueError("factors must be non-empty")
    rank, e = bundle.rank, bundle.c1
    terms: dict[tuple[int, int], int] = {(0, 0): 1}
    for cls in factors:
        nxt: dict[tuple[int, int], int] = {}
        for (i, j), c in terms.items():
            _accumulate(nxt, i + 1, j, c * cls.h, rank, e)
            _accumulate(nxt, i, j + 1, c * cls.f, rank, e)
        terms = {key: c for key, c in nxt.items() if c != 0}
    return ChowElement(terms)


def top_degree(bundle: ProjBundleModel, element: ChowElement) -> int:
    """Integral over P(E) of a class of top degree (= rank).

    The element must be homogeneous of degree rank; in canonical form such
    a class is a multiple of H^(rank-1)*F, whose integral is its
    coefficient.
    """
    reduced = reduce_element(bundle, element.coefficients)
    degs = reduced.degrees()
    if degs and degs != {bundle.rank}:
        raise ValueError(
            f"element is not homogeneous of degree {bundle.rank}: degrees {sorted(degs)}"
        )
    return reduced.coefficient(bundle.rank - 1, 1)


def canonical_class(bundle: ProjBundleModel) -> DivisorClass:
    """Canonical class of P(E): -rank*H + (2*g(C) - 2 + c1)*F.

    The relative-canonical shape is pinned down by the rank-3 identity
    K + 2*(2H + bF) = H exactly when c1 + 2b = 0, which the tests enforce.
    """
    return DivisorClass(-bundle.rank, 2 * bundle.base.genus - 2 + bundle.c1)


@dataclass(frozen=True)
class QuadricInvariants:
    """Degree, sectional genus and smoothness defect of a member of |2H + bF|."""

    d: int
    g: int
    s: int


def quadric_invariants(bundle: ProjBundleModel, b: int) -> QuadricInvariants:
    """Closed forms for M in |2H + bF| with L = H restricted to M.

        d = 2e + b,   2g - 2 = 2*(2 g(C) - 2 + e + b),   s = 2e + rank*b,

    with e = c1(E).  s >= 0 for an actual fibration, with equality exactly
    when every fibre is smooth; callers filter.
    """
    e = bundle.c1
    g_c = bundle.base.genus
    return QuadricInvariants(
        d=2 * e + b,
        g=2 * g_c - 2 + e + b + 1,
        s=2 * e + bundle.rank * b,
    )


def sectional_genus_divisor(
    bundle: ProjBundleModel, member: DivisorClass, polarization: DivisorClass
) -> int:
    """Sectional genus of a divisor M in |member| polarized by ``polarization``.

    Computed by adjunction inside P(E):
        2g - 2 = (K_P + M + (n-1)L) * L^(n-1) * M,  n = rank - 1.
    Raises when the adjoint number is odd (no genus interpretation).
    """
    n = bundle.rank - 1
    adjoint = canonical_class(bundle) + member + (n - 1) * polarization
    value = top_degree(
        bundle, multiply_classes(bundle, [adjoint] + [polarization] * (n - 1) + [member])
    )
    if value % 2 != 0:
        raise ValueError(f"odd adjoint number {value}: not of the form 2g - 2")
    return value // 2 + 1


@dataclass(frozen=True)
class VeroneseInvariants:
    d: int
    g: int


def veronese_invariants(bundle: ProjBundleModel, b: int) -> VeroneseInvariants:
    """Degree and genus of L = 2H + bF on a rank-3 bundle's projectivization.

    Both numbers come out of the ring (d = L^3 and 2g - 2 = (K + 2L)*L^2);
    the closed forms d = 8e + 12b and 2g - 2 = d + 8*(g(C) - 1) are kept as
    an independent oracle in the tests.
    """
    if bundle.rank != 3:
        raise ValueError(f"rank must be 3 for a Veronese fibration model, got {bundle.rank}")
    polarization = DivisorClass(2, b)
    d = top_degree(bundle, multiply_classes(bundle, [polarization] * 3))
    adjoint = canonical_class(bundle) + 2 * polarization
    value = top_degree(bundle, multiply_classes(bundle, [adjoint, polarization, polarization]))
    if value % 2 != 0:
        raise ValueError(f"odd adjoint number {value}: not of the form 2g - 2")
    return VeroneseInvariants(d=d, g=value // 2 + 1)


def h0_line_bundle_sum_P1(degrees: Iterable[int]) -> int:
    """h^0 on P^1 of a direct sum of line bundles of the given degrees."""
    return sum(max(0, a + 1) for a in degrees)


def _sym2_degrees(degrees: Sequence[int], t: int) -> list[int]:
    n = len(degrees)
    return [degrees[i] + degrees[j] + t for i in range(n) for j in range(i, n)]


def h0_sym2_twist(splitting: SplittingType, t: int) -> int:
    """h^0 on P^1 of Sym^2 of the split bundle twisted by O(t)."""
    return h0_line_bundle_sum_P1(_sym2_degrees(splitting.degrees, t))


@dataclass(frozen=True)
class TruncationReport:
    number: int
    applicable: bool
    violated: bool


def truncation_positivity(splitting: SplittingType, b: int, k: int) -> TruncationReport:
    """Positivity number of the codimension-k coordinate truncation.

    For M in |2H + bF| and the subvariety W cut out by the k largest
    coordinate summands, the ring gives

        H^(n-k) * (2H + bF) * prod(H - e_i F  for the k largest e_i)
            = d - 2*(sum of the k largest degrees),   d = 2*sum(e) + b.

    When e_0 <= 0 the locus W avoids M, so the number must be positive as
    soon as dim(M cap W) = n - k is forced positive; that needs n >= 2 for
    k = 2 and n >= k + 1 for k >= 3 (at n = k the intersection may be
    empty, so nothing is asserted).
    """
    degrees = splitting.degrees
    n = len(degrees) - 1
    if not 2 <= k <= n:
        raise ValueError(f"k must lie in [2, {n}], got {k}")
    d = 2 * splitting.c1 + b
    number = d - 2 * sum(degrees[-k:])
    applicable = degrees[0] <= 0 and (k == 2 or n >= k + 1)
    return TruncationReport(number=number, applicable=applicable, violated=applicable and number <= 0)


def base_locus_index_set(splitting: SplittingType, b: int) -> tuple[int, ...]:
    """Indices of coordinate summands inside the base locus of |2H + bF|.

    A section of |2H + bF| is a b-twisted quadric in the fibre coordinates;
    the monomial sigma_i * sigma_j occurs only when e_i + e_j + b >= 0.
    The base locus therefore contains the coordinate subbundle P(E_J) for
    the largest lower set J with e_i + e_j + b < 0 on all pairs from J,
    i.e. J = {i : 2 e_i + b < 0} by sortedness.  Empty J means the system
    is free of coordinate-subbundle base components.
    """
    return tuple(i for i, a in enumerate(splitting.degrees) if 2 * a + b < 0)


@dataclass(frozen=True)
class Corank1Report:
    excluded: bool
    witness: int | None


def corank1_emptiness(splitting: SplittingType, b: int) -> Corank1Report:
    """Non-existence via an empty restricted system on a corank-one locus.

    Removing one summand gives a divisor W = P(E_I) not contained in a
    member M of |2H + bF|, so M cap W must be effective in |2H_W + bF|.
    If h^0 of that restricted system vanishes for some removed index the
    candidate cannot exist; the first such index is the witness.
    """
    degrees = splitting.degrees
    for i in range(len(degrees)):
        if h0_line_bundle_sum_P1(_sym2_degrees(splitting.drop(i), b)) == 0:
            return Corank1Report(excluded=True, witness=i)
    return Corank1Report(excluded=False, witness=None)


@dataclass(frozen=True)
class NormalObstructionDetail:
    index_set: tuple[int, ...]
    p: int
    q: int
    c: int
    h0_p: int
    h0_q: int
    pairing: int
    self_p: int
    self_q: int
    branch: str


@dataclass(frozen=True)
class NormalObstructionReport:
    applicable: bool
    excluded: bool
    detail: NormalObstructionDetail | None


def normal_obstruction(splitting: SplittingType, b: int) -> NormalObstructionReport:
    """Non-existence via the normal-bundle sequence along a surface base locus.

    Defined for rank 4 only.  Applicable when the base locus of |2H + bF|
    is the surface B = P(E_J) with |J| = 2.  Writing e_a, e_b for the two
    complementary degrees, p = b + e_a, q = b + e_b and c = c1(E_J), a
    smooth member would split the normal sequence of B through two
    sections, of classes H + pF and H + qF on B.  The candidate is
    excluded when

      * one class has no sections while the other has nonzero
        self-intersection (c + 2p resp. c + 2q), so the surviving section
        must vanish somewhere; or
      * both classes have sections but the pairing c + p + q >= 1 forces a
        common zero.
    """
    degrees = splitting.degrees
    if len(degrees) != 4:
        raise ValueError("the normal-bundle obstruction is specific to rank-4 splittings")
    index_set = base_locus_index_set(splitting, b)
    if len(index_set) != 2:
        return NormalObstructionReport(applicable=False, excluded=False, detail=None)
    complement = [i for i in range(4) if i not in index_set]
    e_a, e_b = degrees[complement[0]], degrees[complement[1]]
    p, q = b + e_a, b + e_b
    c = sum(degrees[j] for j in index_set)
    h0_p = h0_line_bundle_sum_P1([degrees[j] + p for j in index_set])
    h0_q = h0_line_bundle_sum_P1([degrees[j] + q for j in index_set])
    pairing = c + p + q
    self_p, self_q = c + 2 * p, c + 2 * q

    if h0_p == 0 and self_q != 0:
        branch, excluded = "vanishing-section", True
    elif h0_q == 0 and self_p != 0:
        branch, excluded = "vanishing-section", True
    elif h0_p > 0 and h0_q > 0 and pairing >= 1:
        branch, excluded = "pairing", True
    else:
        branch, excluded = "none", False
    detail = NormalObstructionDetail(
        index_set=index_set,
        p=p,
        q=q,
        c=c,
        h0_p=h0_p,
        h0_q=h0_q,
        pairing=pairing,
        self_p=self_p,
        self_q=self_q,
        branch=branch,
    )
    return NormalObstructionReport(applicable=True, excluded=excluded, detail=detail)
