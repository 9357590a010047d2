"""Hilbert bases of pointed rational cones and the cone-based normality tests.

The Hilbert basis is computed from a placing triangulation: every lattice
point of the cone is a lattice point of some simplicial cone, hence a sum of
simplex generators and one point of that simplex's half-open parallelepiped.
Generators plus parallelepiped points therefore generate the semigroup, and
the minimal Hilbert basis is the set of those candidates that no other
candidate lies below in the cone order (compared via facet heights).

A graded-completion method is kept as an independent second route for small
cones.
"""

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from math import ceil, floor, lcm
from typing import Callable, Optional, Sequence, Tuple

import numpy as np

from . import kernels
from .errors import UnsupportedInput, as_budget
from .exact_lp import lp_min
from .ideal import MonomialIdeal, incidence_matrix, power_membership
from .polyhedral import (
    cone_facets,
    det_adj,
    dot,
    fits_int64,
    independent_subset,
    integer_kernel,
    parallelepiped_points,
    placing_triangulation,
    primitive,
)

IntVector = Tuple[int, ...]


def _grading(gens):
    """An integral functional strictly positive on every generator, or None."""
    d = len(gens[0])
    if all(sum(g) > 0 for g in gens):
        return (1,) * d
    # min sum(c+ + c-) s.t. <c+ - c-, g> >= 1 for every generator
    A = [list(g) + [-x for x in g] for g in gens]
    sol = lp_min(A, [1] * len(gens), [1] * (2 * d))
    if not sol.optimal:
        return None
    c = [sol.primal_point[i] - sol.primal_point[d + i] for i in range(d)]
    m = lcm(*(Fraction(x).denominator for x in c))
    return primitive(tuple(int(x * m) for x in c))


@dataclass(frozen=True)
class IntegerCone:
    """A pointed cone spanned by nonzero integer vectors.

    Construction verifies pointedness by finding an integral grading that is
    strictly positive on every generator.
    """

    dim: int
    generators: Tuple[IntVector, ...]
    grading: IntVector = field(init=False, compare=False)

    def __post_init__(self):
        gens = tuple(tuple(int(x) for x in g) for g in self.generators)
        object.__setattr__(self, "generators", gens)
        if not gens:
            raise UnsupportedInput("a cone needs at least one generator")
        if any(len(g) != self.dim for g in gens):
            raise ValueError(f"generators must have length {self.dim}")
        if any(not any(g) for g in gens):
            raise UnsupportedInput("cone generators must be nonzero")
        c = _grading(gens)
        if c is None:
            raise UnsupportedInput("cone is not pointed: no functional is positive on all generators")
        object.__setattr__(self, "grading", c)

    def degree(self, v) -> int:
        return dot(self.grading, v)


@dataclass(frozen=True)
class HilbertBasisReport:
    minimal_hb: Tuple[IntVector, ...]
    input_is_hb: bool
    witness: Optional[IntVector]
    grading: IntVector
    complete: bool = True  # False when a witness search stopped early
    num_simplices: int = 0
    num_candidates: int = 0
    method: str = "triangulation"


# -- semigroup membership --------------------------------------------------------


def semigroup_decomposition(x, gens, facets, grading=None):
    """Multiplicities ``n`` with ``sum n_i gens_i = x``, or None if ``x`` is not in ``N gens``.

    Depth-first search over generators, pruning every residual that leaves
    the cone (some facet height negative); dead states are memoized.
    """
    x = tuple(x)
    q = len(gens)
    gh = [tuple(dot(f, g) for f in facets) for g in gens]
    if grading is None:
        grading = (1,) * len(x)
    order = sorted(range(q), key=lambda i: (-dot(grading, gens[i]), gens[i]))
    dead = set()

    def search(r, rh, start):
        if not any(r):
            return []
        key = (r, start)
        if key in dead:
            return None
        for pos in range(start, q):
            i = order[pos]
            h = gh[i]
            if all(a >= b for a, b in zip(rh, h)):
                g = gens[i]
                sub = search(tuple(a - b for a, b in zip(r, g)), tuple(a - b for a, b in zip(rh, h)), pos)
                if sub is not None:
                    return [i] + sub
        dead.add(key)
        return None

    xh = tuple(dot(f, x) for f in facets)
    if any(v < 0 for v in xh):
        return None
    found = search(x, xh, 0)
    if found is None:
        return None
    counts = [0] * q
    for i in found:
        counts[i] += 1
    return tuple(counts)


# -- lattice reduction ---------------------------------------------------------


class _Lattice:
    """Coordinates in the saturated lattice spanned by the generators."""

    def __init__(self, gens):
        d = len(gens[0])
        rows = independent_subset(gens)
        self.rank = len(rows)
        self.full = self.rank == d
        if self.full:
            return
        ortho = integer_kernel([list(g) for g in gens])
        self.basis = integer_kernel([list(w) for w in ortho], ncols=d)  # d-vectors
        cols = [list(c) for c in zip(*self.basis)]  # d x r
        pick = independent_subset(cols)  # r rows of the basis matrix that are independent
        self.pick = pick
        square = [cols[i] for i in pick]
        self.det, self.adj = det_adj(square)

    def to_coords(self, v):
        if self.full:
            return tuple(v)
        rhs = [v[i] for i in self.pick]
        c = [sum(self.adj[k][j] * rhs[j] for j in range(self.rank)) for k in range(self.rank)]
        if any(x % self.det for x in c):
            raise ValueError("vector outside the lattice")
        c = tuple(x // self.det for x in c)
        if self.from_coords(c) != tuple(v):
            raise ValueError("vector outside the span of the generators")
        return c

    def from_coords(self, c):
        if self.full:
            return tuple(c)
        d = len(self.basis[0])
        return tuple(sum(c[k] * self.basis[k][i] for k in range(self.rank)) for i in range(d))


# -- Hilbert basis -----------------------------------------------------------------


def _reduce(cands, facets, grading):
    """The candidates not lying above another candidate in the cone order."""
    cands = sorted(set(cands), key=lambda v: (dot(grading, v), v))
    heights = [[dot(f, v) for f in facets] for v in cands]
    flat = [h for row in heights for h in row]
    if fits_int64(flat):
        mask = kernels.minimal_mask(np.array(heights, dtype=np.int64).reshape(len(cands), len(facets)))
        return [v for v, keep in zip(cands, mask) if keep]
    kept, kept_h = [], []
    for v, h in zip(cands, heights):
        if not any(all(a <= b for a, b in zip(kh, h)) for kh in kept_h):
            kept.append(v)
            kept_h.append(h)
    return kept


def _local_points(gens, simplex, budget):
    """Parallelepiped points of a simplex that are minimal within that simplex."""
    D, pts, coords = parallelepiped_points([gens[i] for i in simplex], budget)
    if D == 1 or len(pts) == 0:
        return D, []
    order = np.lexsort(coords.T[::-1])
    order = order[np.argsort(coords[order].sum(axis=1), kind="stable")]
    mask = kernels.minimal_mask(coords[order])
    keep = order[mask]
    return D, [tuple(int(x) for x in pts[i]) for i in keep]


def hilbert_basis(
    C: IntegerCone,
    budget=None,
    method: str = "triangulation",
    first_witness: bool = False,
    in_semigroup: Optional[Callable[[IntVector], bool]] = None,
) -> HilbertBasisReport:
    """The unique minimal Hilbert basis of ``C`` and whether the input generators form one.

    ``first_witness=True`` stops at the first lattice point of the cone found
    outside the semigroup of the generators (after greedily shrinking it);
    the report is then marked incomplete.  ``in_semigroup`` may supply a
    faster membership oracle for that search (coordinates are ambient).
    """
    budget = as_budget(budget)
    lat = _Lattice(C.generators)
    gens = [lat.to_coords(g) for g in C.generators]
    r = lat.rank
    grading = _grading(gens)
    gen_set = set(gens)

    if method == "graded":
        facets = cone_facets(gens) if r > 1 else [(1,) if gens[0][0] > 0 else (-1,)]
        hb = _graded_completion(gens, facets, grading, budget)
        return _finish(C, lat, gens, facets, grading, hb, 0, len(hb), "graded")
    if method != "triangulation":
        raise ValueError(f"unknown Hilbert basis method {method!r}")

    if r == 1:
        v = primitive(gens[0])
        facets = [(1,) if v[0] > 0 else (-1,)]
        return _finish(C, lat, gens, facets, grading, [v], 1, len(gen_set) + 1, "triangulation")

    tri = placing_triangulation(gens, budget)
    facets = tri.facets
    member = in_semigroup
    if first_witness and member is None:
        member = lambda v: semigroup_decomposition(v, gens, facets, grading) is not None  # noqa: E731
    elif first_witness:
        outer = in_semigroup
        member = lambda v: outer(lat.from_coords(v))  # noqa: E731

    cands = set(gens)
    total = 0
    for simplex in tri.simplices:
        budget.check_time("Hilbert basis")
        D, pts = _local_points(gens, simplex, budget)
        total += len(pts)
        budget.check_points(total, "Hilbert basis candidates")
        if first_witness:
            for p in sorted(pts, key=lambda v: (dot(grading, v), v)):
                if p not in gen_set and not member(p):
                    w = _shrink_witness(p, gens, facets, member)
                    return HilbertBasisReport(
                        (), False, lat.from_coords(w), C.grading, False, len(tri.simplices), total, "triangulation"
                    )
        cands.update(pts)
    hb = _reduce(cands, facets, grading)
    return _finish(C, lat, gens, facets, grading, hb, len(tri.simplices), len(cands), "triangulation")


def _shrink_witness(w, gens, facets, member):
    """Subtract generators while the result stays in the cone and outside the semigroup."""
    changed = True
    while changed:
        changed = False
        for g in gens:
            y = tuple(a - b for a, b in zip(w, g))
            if any(y) and all(dot(f, y) >= 0 for f in facets) and not member(y):
                w = y
                changed = True
                break
    return w


def _finish(C, lat, gens, facets, grading, hb, nsimp, ncand, method):
    gen_set = set(gens)
    hb = sorted(hb, key=lambda v: (dot(grading, v), v))
    missing = [v for v in hb if v not in gen_set]
    witness = None
    if missing:
        w = missing[0]  # smallest degree, then lexicographic
        if semigroup_decomposition(w, gens, facets, grading) is not None:
            raise AssertionError(f"Hilbert basis element {w} unexpectedly in the generated semigroup")
        witness = lat.from_coords(w)
    minimal = tuple(lat.from_coords(v) for v in hb)
    return HilbertBasisReport(minimal, not missing, witness, C.grading, True, nsimp, ncand, method)


def hb_degree_bound(gens, grading) -> int:
    """Every minimal Hilbert basis element has degree at most this.

    It lies in the half-open parallelepiped of some simplex of a
    triangulation (or is a generator), so its degree is below the sum of the
    ``rank`` largest generator degrees.
    """
    r = len(independent_subset(gens))
    degs = sorted((dot(grading, g) for g in gens), reverse=True)
    return max(sum(degs[:r]), degs[0])


def _graded_completion(gens, facets, grading, budget):
    """Scan lattice points of the cone degree by degree, keeping irreducible ones."""
    d = len(gens[0])
    bound = hb_degree_bound(gens, grading)
    lo = [min(Fraction(g[j], dot(grading, g)) for g in gens) for j in range(d)]
    hi = [max(Fraction(g[j], dot(grading, g)) for g in gens) for j in range(d)]
    accepted = []
    acc_h = []
    count = 0
    for k in range(1, bound + 1):
        budget.check_time("graded completion")
        ranges = [range(ceil(k * lo[j]), floor(k * hi[j]) + 1) for j in range(d)]
        size = 1
        for rg in ranges:
            size *= len(rg)
        count += size
        budget.check_points(count, "graded completion lattice points")
        for x in itertools.product(*ranges):
            if dot(grading, x) != k:
                continue
            h = [dot(f, x) for f in facets]
            if any(v < 0 for v in h):
                continue
            if any(all(a <= b for a, b in zip(ah, h)) for ah in acc_h):
                continue
            accepted.append(tuple(x))
            acc_h.append(h)
    return accepted


# -- cones attached to monomial ideals -----------------------------------------------


def rees_cone(I: MonomialIdeal) -> IntegerCone:
    """Generators ``e_1..e_s`` and ``(v_i, 1)`` in dimension ``s+1``."""
    incidence_matrix(I)  # rejects zero/unit ideals
    s = I.num_vars
    units = [tuple(1 if j == i else 0 for j in range(s + 1)) for i in range(s)]
    lifted = [tuple(g) + (1,) for g in I.gens]
    return IntegerCone(s + 1, tuple(units + lifted))


def b_set(I: MonomialIdeal) -> IntegerCone:
    """Generators ``e_{s+1}``, ``e_i + e_{s+1}`` and ``(v_i, 1)`` in dimension ``s+1``."""
    incidence_matrix(I)
    s = I.num_vars
    top = tuple([0] * s + [1])
    shifted = [tuple(1 if j in (i, s) else 0 for j in range(s + 1)) for i in range(s)]
    lifted = [tuple(g) + (1,) for g in I.gens]
    return IntegerCone(s + 1, tuple([top] + shifted + lifted))


@dataclass(frozen=True)
class NormalityReport:
    """Verdict on the normality of an ideal, with the evidence behind it.

    For a non-normal ideal ``witness``/``power`` give a monomial ``t^a`` in
    the closure of ``I^power`` but not in ``I^power``; ``lp_value`` and
    ``lam`` certify closure membership, ``root_power`` is a ``p`` with
    ``(t^a)^p in I^(p*power)`` and ``root_multiset`` the generator counts
    proving it.
    """

    normal: bool
    route: str
    witness: Optional[IntVector] = None
    power: Optional[int] = None
    lp_value: Optional[Fraction] = None
    lam: Optional[Tuple[Fraction, ...]] = None
    root_power: Optional[int] = None
    root_multiset: Optional[Tuple[int, ...]] = None
    cone_witness: Optional[IntVector] = None
    hb: Optional[HilbertBasisReport] = None
    note: str = ""


def closure_certificate(I: MonomialIdeal, a, n: int, route: str, **extra) -> NormalityReport:
    """Check ``t^a in closure(I^n) \\ I^n`` and package the evidence.

    Raises AssertionError if either side of the check fails, since that
    would mean the engine produced a bogus witness.
    """
    from .closure import closure_membership, root_power_certificate

    verdict = closure_membership(I, a, n)
    if not verdict.member:
        raise AssertionError(f"witness {a} is not in the closure of I^{n} (LP value {verdict.lp_value})")
    if power_membership(I, a, n).member:
        raise AssertionError(f"witness {a} already lies in I^{n}")
    p, mult = root_power_certificate(I, a, n, verdict.lam, verdict.lp_value)
    return NormalityReport(
        False, route, tuple(a), n, verdict.lp_value, verdict.lam, p, mult, **extra
    )


def normality_via_rees(I: MonomialIdeal, budget=None, first_witness: bool = False) -> NormalityReport:
    """``I`` is normal iff its Rees-cone generators form a Hilbert basis."""
    C = rees_cone(I)

    def member(v):
        return power_membership(I, v[:-1], v[-1]).member

    rep = hilbert_basis(C, budget, first_witness=first_witness, in_semigroup=member if first_witness else None)
    if rep.input_is_hb:
        return NormalityReport(True, "rees", hb=rep)
    w = rep.witness
    return closure_certificate(I, w[:-1], w[-1], "rees", cone_witness=w, hb=rep)


def _require_degree_two(I, what):
    if not I.is_proper:
        raise UnsupportedInput(f"{what} needs a proper ideal, got the {I.kind} ideal")
    bad = [g for g in I.gens if sum(g) != 2]
    if bad:
        raise UnsupportedInput(
            f"{what} applies only to ideals generated in degree 2; "
            f"a generator of degree {sum(bad[0])} is present (the criterion fails beyond degree 2)"
        )


def b_set_membership(I: MonomialIdeal, alpha, b) -> bool:
    """``(alpha, b) in N B``  iff  ``t^alpha in I^k`` with ``k = max(0, |alpha| - b)``."""
    k = max(0, sum(alpha) - b)
    return power_membership(I, alpha, k).member


def normality_via_bset(I: MonomialIdeal, budget=None) -> NormalityReport:
    """For a degree-2 ideal, ``I`` is normal iff the set ``B`` is a Hilbert basis.

    A lattice point ``(alpha, b)`` of the ``B``-cone outside ``N B`` yields
    ``t^alpha in closure(I^k) \\ I^k`` with ``k = |alpha| - b``.
    """
    _require_degree_two(I, "the B-set criterion")
    rep = hilbert_basis(b_set(I), budget)
    if rep.input_is_hb:
        return NormalityReport(True, "bset", hb=rep)
    w = rep.witness
    alpha, b = w[:-1], w[-1]
    if b_set_membership(I, alpha, b):
        raise AssertionError(f"B-cone witness {w} lies in N B")
    return closure_certificate(I, alpha, sum(alpha) - b, "bset", cone_witness=w, hb=rep)


def dual_normality(I: MonomialIdeal, budget=None) -> NormalityReport:
    """Normality of ``I*`` for the edge ideal ``I`` of a graph: same as that of ``I``."""
    if not I.is_squarefree:
        raise UnsupportedInput("dual_normality needs the edge ideal of a graph (squarefree)")
    _require_degree_two(I, "dual_normality")
    rep = normality_via_rees(I, budget)
    return NormalityReport(rep.normal, "dual-of-edge-ideal", note="decided by the Rees-cone test on I itself")
