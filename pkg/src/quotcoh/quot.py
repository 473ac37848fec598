"""Cohomology of tautological sheaves on Quot schemes of the projective line.

The Quot scheme of degree-n, rank-r quotients of a split bundle on the line
embeds in a product of two Grassmannians as the zero locus of a regular
section of E = A1* . W . B2, where W is the two-dimensional space of linear
forms.  The Koszul complex of that section, tensored by the pullback sheaf
realizing the tautological bundle, resolves the sheaf on the product, and
every resolution term splits into homogeneous pieces via the Cauchy identity

    wedge^l E* = sum over |lam| = l of S_{lam^T}(A1) box S_lam(B2* + B2*),

with lam confined to 2 rank(B2) rows and rank(A1) columns.  Each piece is a
pair of single-Grassmannian bundles, so its cohomology follows from
Borel-Weil-Bott and Kunneth, and the alternating sum over l computes the
Euler characteristic of the tautological sheaf unconditionally.  When every
term in degrees l >= 1 turns out acyclic, the degeneration flag certifies
that the degree-0 term's cohomology equals the actual cohomology on Quot.
"""

from dataclasses import dataclass, field
from typing import Optional

from .bott import (
    GrassmannianContext,
    HomogeneousBundle,
    bwb,
)
from .partitions import (
    binom,
    enumerate_in_box,
    negate_reverse,
    pad,
    size,
    transpose,
    weyl_dim,
)
from .schur import double_bundle_expand, pieri_sym, pieri_wedge

G1 = "G1"
G2 = "G2"


@dataclass(frozen=True)
class EmbeddingData:
    """Numerical data of the two-Grassmannian embedding.

    splitting lists the degrees of the summands of the bundle being
    quotiented (all zero for the trivial bundle), n and r are the degree and
    rank of the quotients, and m is the twist; sections of twists m-1 and m
    span the two factor Grassmannians.
    """

    N: int
    splitting: tuple
    n: int
    r: int
    m: int
    d1: int = field(init=False)
    d2: int = field(init=False)
    q1: int = field(init=False)
    q2: int = field(init=False)
    rank_e: int = field(init=False)

    def __post_init__(self):
        splitting = tuple(sorted((int(a) for a in self.splitting),
                                 reverse=True))
        object.__setattr__(self, "splitting", splitting)
        if self.N < 1 or len(splitting) != self.N:
            raise ValueError("splitting must list one degree per summand")
        if not 0 <= self.r <= self.N - 1:
            raise ValueError(f"need 0 <= r <= N-1, got r={self.r}")
        if self.n < 0:
            raise ValueError("n must be nonnegative")
        deg = sum(splitting)
        min_m = self.n + (self.N - 1) * splitting[0] - deg
        if self.m < min_m:
            raise ValueError(f"twist m={self.m} too small; the embedding "
                             f"needs m >= {min_m}")
        d1 = deg + self.N * self.m
        d2 = deg + self.N * (self.m + 1)
        q1 = self.n + self.r * self.m
        q2 = self.n + self.r * (self.m + 1)
        if not (0 <= q1 <= d1 and 0 <= q2 <= d2):
            raise ValueError("degenerate embedding: quotient ranks exceed "
                             "section space dimensions")
        rank_e = (d1 - q1) * 2 * q2
        object.__setattr__(self, "d1", d1)
        object.__setattr__(self, "d2", d2)
        object.__setattr__(self, "q1", q1)
        object.__setattr__(self, "q2", q2)
        object.__setattr__(self, "rank_e", rank_e)
        if all(a == 0 for a in splitting):
            # The section is regular, so the rank of E must equal the
            # codimension of the Quot scheme in the ambient product.
            ambient = q1 * (d1 - q1) + q2 * (d2 - q2)
            quot_dim = self.N * self.n + self.r * (self.N - self.r)
            if rank_e != ambient - quot_dim:
                raise AssertionError(
                    f"codimension check failed: rank E = {rank_e}, ambient "
                    f"dim {ambient}, Quot dim {quot_dim}")

    @property
    def ctx1(self) -> GrassmannianContext:
        return GrassmannianContext(self.d1, self.q1)

    @property
    def ctx2(self) -> GrassmannianContext:
        return GrassmannianContext(self.d2, self.q2)

    def quotient_rank(self, side: str) -> int:
        return self.q1 if side == G1 else self.q2

    def twist_degree(self, side: str) -> int:
        """Degree of the line bundle realized by the tautological quotient
        on the given side."""
        return self.m - 1 if side == G1 else self.m


def embedding_data(N: int, splitting, n: int, r: int, m: int) -> EmbeddingData:
    """Build and validate the embedding data; splitting=None means the
    trivial bundle of rank N."""
    if splitting is None:
        splitting = (0,) * N
    return EmbeddingData(N, tuple(splitting), n, r, m)


@dataclass(frozen=True)
class TautologicalSheaf:
    """A tautological sheaf to resolve: one exterior or symmetric power, or
    a product of dualized exterior powers.

    Each degree k comes with the side naming the twist that realizes the
    underlying line bundle: G2 for degree m, G1 for degree m - 1.
    """

    functor: str  # "wedge" | "sym" | "dual"
    ks: tuple
    sides: tuple

    def __post_init__(self):
        if self.functor not in ("wedge", "sym", "dual"):
            raise ValueError(f"unknown functor {self.functor!r}")
        ks = tuple(int(k) for k in self.ks)
        sides = tuple(self.sides)
        object.__setattr__(self, "ks", ks)
        object.__setattr__(self, "sides", sides)
        if len(ks) != len(sides):
            raise ValueError("each degree needs a side")
        if any(s not in (G1, G2) for s in sides):
            raise ValueError("sides must be G1 or G2")
        if self.functor in ("wedge", "sym") and len(ks) != 1:
            raise ValueError("wedge and sym take a single degree")
        if any(k < 0 for k in ks):
            raise ValueError("degrees must be nonnegative")

    def describe(self) -> str:
        if self.functor == "dual":
            inner = ", ".join(f"{k}@{s}" for k, s in zip(self.ks, self.sides))
            return f"dual-wedge product [{inner}]"
        return f"{self.functor}^{self.ks[0]} via {self.sides[0]}"


def wedge_power(k: int, side: str = G2) -> TautologicalSheaf:
    return TautologicalSheaf("wedge", (k,), (side,))


def sym_power(k: int, side: str = G2) -> TautologicalSheaf:
    return TautologicalSheaf("sym", (k,), (side,))


def dual_wedge_product(factors) -> TautologicalSheaf:
    factors = tuple(factors)
    return TautologicalSheaf("dual", tuple(k for k, _ in factors),
                             tuple(s for _, s in factors))


def sheaf_rank(data: EmbeddingData, sheaf: TautologicalSheaf) -> int:
    """Rank of the twisting sheaf on the ambient product."""
    total = 1
    for k, side in zip(sheaf.ks, sheaf.sides):
        q = data.quotient_rank(side)
        if sheaf.functor == "sym":
            total *= binom(q + k - 1, k) if k else 1
        else:
            total *= binom(q, k)
    return total


def _validate_sheaf(data: EmbeddingData, sheaf: TautologicalSheaf):
    for k, side in zip(sheaf.ks, sheaf.sides):
        q = data.quotient_rank(side)
        if sheaf.functor in ("wedge", "dual") and k > q:
            raise ValueError(
                f"k={k} exceeds the rank {q} of the side-{side} quotient")
        if sheaf.functor == "sym" and k > 0 and q == 0:
            raise ValueError("symmetric power of a rank-0 bundle")


def _chain_dual_wedges(start: dict, ks) -> dict:
    """Tensor dual-quotient weights by dual exterior powers, one after the
    other; weights stay in dual coordinates."""
    acc = dict(start)
    for k in ks:
        step: dict = {}
        for w, mult in acc.items():
            for nw in pieri_wedge(w, k):
                step[nw] = step.get(nw, 0) + mult
        acc = step
    return acc


def _g2_summands(data: EmbeddingData, sheaf: TautologicalSheaf,
                 gamma: tuple) -> dict:
    """Expand one dual-coordinate weight gamma through the side-G2 twist.

    Returns {dual-coordinate weight: multiplicity}.
    """
    q2 = data.q2
    base = pad(gamma, q2)
    if sheaf.functor == "wedge" and sheaf.sides[0] == G2:
        k = sheaf.ks[0]
        return {tuple(e - 1 for e in w): 1
                for w in pieri_wedge(base, q2 - k)}
    if sheaf.functor == "sym" and sheaf.sides[0] == G2:
        return dict(pieri_sym(base, sheaf.ks[0], dualized=True))
    if sheaf.functor == "dual":
        ks = [k for k, s in zip(sheaf.ks, sheaf.sides) if s == G2]
        return _chain_dual_wedges({base: 1}, ks)
    return {base: 1}


def _g1_quot_weights(data: EmbeddingData, sheaf: TautologicalSheaf) -> dict:
    """Quotient-side weights on the first Grassmannian contributed by the
    twist, in ordinary (non-dual) coordinates."""
    q1 = data.q1
    trivial = (0,) * q1
    if sheaf.functor == "wedge" and sheaf.sides[0] == G1:
        k = sheaf.ks[0]
        return {(1,) * k + (0,) * (q1 - k): 1}
    if sheaf.functor == "sym" and sheaf.sides[0] == G1:
        k = sheaf.ks[0]
        return {(k,) + (0,) * (q1 - 1): 1} if k else {trivial: 1}
    if sheaf.functor == "dual":
        ks = [k for k, s in zip(sheaf.ks, sheaf.sides) if s == G1]
        dual = _chain_dual_wedges({(0,) * q1: 1}, ks)
        return {negate_reverse(w): mult for w, mult in dual.items()}
    return {trivial: 1}


@dataclass(frozen=True)
class ResolutionTerm:
    ell: int
    summands: tuple  # of (HomogeneousBundle, HomogeneousBundle, multiplicity)

    def total_rank(self) -> int:
        return sum(m * b1.rank() * b2.rank() for b1, b2, m in self.summands)


def resolution_terms(data: EmbeddingData, sheaf: TautologicalSheaf,
                     ell: int) -> ResolutionTerm:
    """The degree-ell term of the twisted Koszul resolution, split into
    homogeneous summands over the two Grassmannians."""
    if not 0 <= ell <= data.rank_e:
        raise ValueError(f"ell={ell} outside 0..{data.rank_e}")
    _validate_sheaf(data, sheaf)
    ctx1, ctx2 = data.ctx1, data.ctx2
    sub_len = data.d1 - data.q1
    g1_quots = _g1_quot_weights(data, sheaf)
    zeros2 = (0,) * (data.d2 - data.q2)
    acc: dict = {}
    for lam in enumerate_in_box(2 * data.q2, sub_len, ell):
        sub1 = pad(transpose(lam), sub_len)
        g1_bundles = [
            (HomogeneousBundle(ctx1, w, sub1), m)
            for w, m in g1_quots.items()
        ]
        for gamma, mult in double_bundle_expand(lam, data.q2).items():
            for w2, m2 in _g2_summands(data, sheaf, gamma).items():
                b2 = HomogeneousBundle(ctx2, negate_reverse(w2), zeros2)
                for b1, m1 in g1_bundles:
                    key = (b1, b2)
                    acc[key] = acc.get(key, 0) + mult * m1 * m2
    ordered = sorted(
        acc.items(),
        key=lambda kv: (kv[0][0].quot, kv[0][0].sub, kv[0][1].quot),
        reverse=True,
    )
    return ResolutionTerm(ell, tuple((b1, b2, m) for (b1, b2), m in ordered))


@dataclass(frozen=True)
class CohomologyProfile:
    """Cohomology dimensions by degree, with the alternating sum."""

    dims: tuple  # of (degree, dimension), increasing degrees

    def as_dict(self) -> dict:
        return dict(self.dims)

    @property
    def chi(self) -> int:
        return sum((-1) ** i * d for i, d in self.dims)

    @property
    def is_zero(self) -> bool:
        return not self.dims

    def degree_range_ok(self, max_degree: int) -> bool:
        return all(0 <= i <= max_degree for i, _ in self.dims)


def term_cohomology(term: ResolutionTerm) -> CohomologyProfile:
    """Kunneth: each summand contributes the product of its two
    single-Grassmannian groups in the sum of the degrees."""
    dims: dict = {}
    for b1, b2, mult in term.summands:
        r1 = bwb(b1)
        if r1.vanishes:
            continue
        r2 = bwb(b2)
        if r2.vanishes:
            continue
        deg = r1.degree + r2.degree
        dim = (mult * weyl_dim(r1.gl_weight, b1.ctx.d)
               * weyl_dim(r2.gl_weight, b2.ctx.d))
        dims[deg] = dims.get(deg, 0) + dim
    return CohomologyProfile(tuple(sorted(dims.items())))


@dataclass(frozen=True)
class QuotCohomology:
    """Outcome of pushing a tautological sheaf through the resolution.

    chi is always valid: the Euler characteristic is additive along the
    resolution.  dims reports actual cohomology of the sheaf on Quot and is
    only available when the degeneration flag certifies that every term in
    degrees >= 1 is acyclic.
    """

    chi: int
    degenerate: bool
    dims: Optional[tuple]
    per_term: tuple  # of (ell, CohomologyProfile)

    def dims_dict(self) -> Optional[dict]:
        return None if self.dims is None else dict(self.dims)


def quot_cohomology(data: EmbeddingData,
                    sheaf: TautologicalSheaf) -> QuotCohomology:
    """Stream the resolution term by term and aggregate."""
    chi = 0
    degenerate = True
    term0: Optional[CohomologyProfile] = None
    per_term = []
    for ell in range(data.rank_e + 1):
        profile = term_cohomology(resolution_terms(data, sheaf, ell))
        per_term.append((ell, profile))
        chi += (-1) ** ell * profile.chi
        if ell == 0:
            term0 = profile
        elif not profile.is_zero:
            degenerate = False
    dims = term0.dims if degenerate else None
    return QuotCohomology(chi, degenerate, dims, tuple(per_term))


@dataclass(frozen=True)
class TheoremReport:
    which: str
    sheaf: TautologicalSheaf
    expected_h0: int
    computed: QuotCohomology
    verified: bool
    notes: tuple = ()


def verify_theorem(data: EmbeddingData, which: str, ks, sides=None) -> TheoremReport:
    """Check one of the three global-sections statements on given data.

    which = "A": sections of an exterior power are the exterior power of the
    twist's section space and higher cohomology vanishes; "B": the same for
    symmetric powers with k <= n; "C": a product of dualized exterior powers,
    not all trivial, has no cohomology at all.
    """
    ks = tuple(int(k) for k in ks)
    if sides is None:
        sides = (G2,) * len(ks)
    sides = tuple(sides)
    if data.r != 0:
        raise ValueError("the theorems concern finite quotients (r = 0)")
    notes = []
    if which in ("A", "B"):
        (k,), (side,) = ks, sides
        deg_l = data.twist_degree(side)
        if deg_l < data.n:
            raise ValueError(f"need deg L >= n, got deg L = {deg_l}")
        if not 0 <= k <= data.n:
            raise ValueError(f"need 0 <= k <= n, got k={k}")
        section_dim = data.d1 if side == G1 else data.d2
        if which == "A":
            sheaf = wedge_power(k, side)
            expected = binom(section_dim, k)
        else:
            sheaf = sym_power(k, side)
            expected = binom(section_dim + k - 1, k)
        computed = quot_cohomology(data, sheaf)
        want = ((0, expected),) if expected else ()
        verified = computed.degenerate and computed.dims == want
        if not computed.degenerate:
            notes.append("some term in degrees >= 1 carries cohomology")
    elif which == "C":
        if not ks or all(k == 0 for k in ks):
            raise ValueError("at least one degree must be positive")
        if len(ks) > data.N - 1:
            raise ValueError(f"at most N-1={data.N - 1} factors allowed")
        if sum(1 for s in sides if s == G1) > 1:
            raise ValueError("at most one factor may use the lower twist")
        if data.m < data.n:
            raise ValueError("need deg M = m >= n")
        sheaf = dual_wedge_product(tuple(zip(ks, sides)))
        expected = 0
        computed = quot_cohomology(data, sheaf)
        verified = all(p.is_zero for _, p in computed.per_term)
    else:
        raise ValueError(f"unknown theorem {which!r}")
    return TheoremReport(which, sheaf, expected, computed, verified,
                         tuple(notes))


@dataclass(frozen=True)
class PropositionReport:
    """Per-degree acyclicity table for one resolution."""

    sheaf: TautologicalSheaf
    rows: tuple  # of (ell, CohomologyProfile, ok)
    ok: bool


def verify_resolution_propositions(data: EmbeddingData,
                                   sheaf: TautologicalSheaf) -> PropositionReport:
    """Certify the per-term vanishing pattern of one resolution.

    Exterior and symmetric twists must be acyclic in degrees >= 1 with the
    degree-0 term concentrated in cohomological degree 0; dualized products
    must be acyclic everywhere.
    """
    if data.r != 0:
        raise ValueError("per-term certification is stated for r = 0")
    if sheaf.functor == "sym":
        k, side = sheaf.ks[0], sheaf.sides[0]
        if not data.twist_degree(side) >= data.n >= k:
            raise ValueError("symmetric case needs deg L >= n >= k")
    rows = []
    for ell in range(data.rank_e + 1):
        profile = term_cohomology(resolution_terms(data, sheaf, ell))
        if sheaf.functor == "dual":
            ok = profile.is_zero
        elif ell >= 1:
            ok = profile.is_zero
        else:
            ok = all(i == 0 for i, _ in profile.dims)
        rows.append((ell, profile, ok))
    return PropositionReport(sheaf, tuple(rows), all(r[2] for r in rows))


@dataclass(frozen=True)
class ConjectureReport:
    which: str
    ks: tuple
    deg_ls: tuple
    predicted: int
    computed: int
    bound: int
    verified: bool


def _side_for_degree(data: EmbeddingData, deg_l: int) -> str:
    if deg_l == data.m:
        return G2
    if deg_l == data.m - 1:
        return G1
    raise ValueError(
        f"deg L = {deg_l} is not realizable in the twist-{data.m} embedding; "
        f"only degrees {data.m - 1} and {data.m} are")


def check_conjecture(data: EmbeddingData, which: str, ks, deg_ls) -> ConjectureReport:
    """Compare a resolution Euler characteristic against the conjectured
    binomial closed form for positive quotient rank.

    wedge/sym take a single degree k <= n + r(a+1) where n = (N-r)a + b;
    dual takes up to N-r-1 degrees with positive total at most
    n + (N-r)(a+1) where n = ar + b.  Line-bundle degrees must be m-1 or m.
    """
    if data.r < 1:
        raise ValueError("the conjectures concern positive quotient rank")
    ks = tuple(int(k) for k in ks)
    deg_ls = tuple(int(d) for d in deg_ls)
    if len(ks) != len(deg_ls):
        raise ValueError("each degree k needs a line bundle degree")
    sides = tuple(_side_for_degree(data, d) for d in deg_ls)
    if which in ("wedge", "sym"):
        if len(ks) != 1:
            raise ValueError("wedge and sym take a single degree")
        a = data.n // (data.N - data.r)
        bound = data.n + data.r * (a + 1)
        if not 0 <= ks[0] <= bound:
            raise ValueError(f"k={ks[0]} exceeds the stated bound {bound}")
        chi_sections = sum(data.splitting) + data.N * (deg_ls[0] + 1)
        if which == "wedge":
            sheaf = wedge_power(ks[0], sides[0])
            predicted = binom(chi_sections, ks[0])
        else:
            sheaf = sym_power(ks[0], sides[0])
            predicted = binom(chi_sections + ks[0] - 1, ks[0])
    elif which == "dual":
        if not 1 <= len(ks) <= data.N - data.r - 1:
            raise ValueError(
                f"need between 1 and N-r-1={data.N - data.r - 1} factors")
        a = data.n // data.r
        bound = data.n + (data.N - data.r) * (a + 1)
        total = sum(ks)
        if not 0 < total <= bound:
            raise ValueError(
                f"total degree {total} outside the stated range 1..{bound}")
        sheaf = dual_wedge_product(tuple(zip(ks, sides)))
        predicted = 0
    else:
        raise ValueError(f"unknown conjecture {which!r}")
    computed = quot_cohomology(data, sheaf).chi
    return ConjectureReport(which, ks, deg_ls, predicted, computed,
                            bound, predicted == computed)
