"""Integral closures of powers of monomial ideals.

Two independent descriptions of ``closure(I^n)`` are used side by side:

* the LP test: ``t^a`` is in ``closure(I^n)`` iff
  ``max{<y,1> : A y <= a, y >= 0} >= n`` (``A`` the incidence matrix);
* the covering polyhedron ``Q(I) = {x >= 0 : x A >= 1}``: the closure is
  generated by the ``t^a`` with ``<a,u> >= n`` for every vertex ``u``.

This module also holds the integer-rounding-property checks and the laws
for products of ideals in disjoint variables.
"""

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import ceil, floor, lcm
from typing import Dict, Optional, Tuple

import numpy as np

from .errors import UnsupportedInput, as_budget
from .exact_lp import lp_max, lp_min, solve_square
from .ideal import (
    MonomialIdeal,
    find_multiset,
    incidence_matrix,
    is_subideal,
    make_ideal,
    power,
    product,
)
from .polyhedral import extreme_rays

QVector = Tuple[Fraction, ...]


@dataclass(frozen=True)
class CoveringPolyhedron:
    ideal: MonomialIdeal
    vertex_list: Tuple[QVector, ...]

    def integral_vertices(self):
        return tuple(u for u in self.vertex_list if all(x.denominator == 1 for x in u))


def _constraint_rows(I):
    """Rows ``h`` and right-hand sides ``b`` of ``Q(I)`` written as ``h x >= b``."""
    s = I.num_vars
    rows = [tuple(1 if j == i else 0 for j in range(s)) for i in range(s)]
    rhs = [0] * s
    for g in I.gens:
        rows.append(tuple(g))
        rhs.append(1)
    return rows, rhs


def covering_vertices(I: MonomialIdeal, method: str = "dd", budget=None) -> CoveringPolyhedron:
    """All vertices of ``Q(I)``, exactly, in lexicographic order.

    ``method="dd"`` runs double description on the homogenized cone
    ``{(x,t) : x >= 0, t >= 0, x A >= t 1}`` and keeps the rays with
    ``t > 0``; ``method="subsets"`` solves every ``s``-subset of the
    ``s + q`` constraints and keeps the feasible solutions.  Variables that
    occur in no generator only add recession directions, so every vertex has
    coordinate 0 there.
    """
    incidence_matrix(I)  # rejects zero and unit ideals
    budget = as_budget(budget)
    s = I.num_vars
    if method == "dd":
        H = [tuple(1 if j == i else 0 for j in range(s + 1)) for i in range(s + 1)]
        H += [tuple(g) + (-1,) for g in I.gens]
        verts = set()
        for r in extreme_rays(H, budget):
            t = r[-1]
            if t > 0:
                verts.add(tuple(Fraction(x, t) for x in r[:-1]))
    elif method == "subsets":
        rows, rhs = _constraint_rows(I)
        verts = set()
        for count, pick in enumerate(itertools.combinations(range(len(rows)), s), 1):
            if count % 4096 == 0:
                budget.check_time("vertex enumeration")
                budget.check_points(count, "constraint subsets")
            x = solve_square([rows[i] for i in pick], [rhs[i] for i in pick])
            if x is None:
                continue
            if all(sum(h[j] * x[j] for j in range(s)) >= b for h, b in zip(rows, rhs)):
                verts.add(x)
    else:
        raise ValueError(f"unknown vertex method {method!r}")
    return CoveringPolyhedron(I, tuple(sorted(verts)))


@dataclass(frozen=True)
class MembershipVerdict:
    """``member`` iff ``lp_value >= n``.

    ``lam`` is an optimal ``lambda >= 0`` with ``A lambda <= a`` and
    ``|lambda| = lp_value``; ``dual`` is an ``x >= 0`` with ``x A >= 1`` and
    ``<a,x> = lp_value``, which separates ``a`` when the value is below ``n``.
    """

    member: bool
    lp_value: Optional[Fraction]
    lam: Optional[QVector]
    dual: Optional[QVector]


def closure_membership(I: MonomialIdeal, a, n: int) -> MembershipVerdict:
    """Decide ``t^a in closure(I^n)`` by one exact LP."""
    if n < 1:
        raise ValueError("n must be at least 1")
    if I.kind == "unit":
        return MembershipVerdict(True, None, None, None)
    if I.kind == "zero":
        return MembershipVerdict(False, None, None, None)
    A = incidence_matrix(I)
    sol = lp_max(A, list(a), [1] * I.num_gens)
    return MembershipVerdict(sol.value >= n, sol.value, sol.primal_point, sol.dual_point)


def root_power_certificate(I: MonomialIdeal, a, n: int, lam, value):
    """A ``p`` with ``(t^a)^p in I^(pn)`` and the generator counts proving it.

    ``lam`` (with ``A lam <= a``, ``|lam| = value >= n``) is scaled to total
    ``n``; ``p`` clears its denominators.
    """
    scaled = [Fraction(x) * n / value for x in lam]
    p = lcm(*(x.denominator for x in scaled)) if scaled else 1
    counts = tuple(int(x * p) for x in scaled)
    A = incidence_matrix(I)
    if sum(counts) != p * n or any(
        sum(A[i][j] * counts[j] for j in range(len(counts))) > p * a[i] for i in range(I.num_vars)
    ):
        raise AssertionError("scaled LP solution does not certify the root power")
    return p, counts


def min_generator_test(I: MonomialIdeal, a, n: int) -> bool:
    """Whether ``t^a`` is a minimal generator of ``closure(I^n)``."""
    if not closure_membership(I, a, n).member:
        return False
    for i, x in enumerate(a):
        if x > 0:
            b = list(a)
            b[i] -= 1
            if closure_membership(I, b, n).member:
                return False
    return True


def closure_generators(I: MonomialIdeal, n: int, budget=None, verify: bool = True) -> MonomialIdeal:
    """The minimal generators of ``closure(I^n)``.

    Lattice points of the box ``0 <= a_j <= n * max_i v_ij`` are tested
    against the vertex inequalities of ``Q(I)``; the minimal members are
    returned.  The box suffices: if ``t^a`` is in the closure, scaling an LP
    solution to total ``n`` gives ``A lambda <= a`` with
    ``(A lambda)_j <= n * max_i v_ij``, so lowering any coordinate above the
    box keeps ``t^a`` in the closure.  With ``verify`` every returned
    generator is re-checked by the LP minimal-generator test.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    if I.kind != "proper":
        return I
    budget = as_budget(budget)
    s = I.num_vars
    top = [n * max(g[j] for g in I.gens) for j in range(s)]
    size = 1
    for t in top:
        size *= t + 1
    budget.check_points(size, "closure box lattice points")
    verts = covering_vertices(I, budget=budget).vertex_list
    grids = np.indices([t + 1 for t in top], dtype=np.int64).reshape(s, -1)
    member = np.ones(grids.shape[1], dtype=bool)
    for u in verts:
        den = lcm(*(x.denominator for x in u))
        w = np.array([int(x * den) for x in u], dtype=np.int64)
        member &= w @ grids >= n * den
    shape = [t + 1 for t in top]
    M = member.reshape(shape)
    minimal = M.copy()
    for axis in range(s):
        shifted = np.zeros_like(M)
        src = [slice(None)] * s
        dst = [slice(None)] * s
        src[axis] = slice(0, -1)
        dst[axis] = slice(1, None)
        shifted[tuple(dst)] = M[tuple(src)]
        minimal &= ~shifted
    pts = np.argwhere(minimal)
    gens = [tuple(int(x) for x in p) for p in pts]
    out = make_ideal(s, gens)
    if verify:
        for g in out.gens:
            if not min_generator_test(I, g, n):
                raise AssertionError(f"{g} failed the LP minimal-generator check")
    return out


def scaled_power_law(I: MonomialIdeal, n: int, budget=None) -> bool:
    """``closure(I^n) == closure((t^{n v_1}, ..., t^{n v_q}))``, computed on both sides."""
    J = make_ideal(I.num_vars, [tuple(n * x for x in g) for g in I.gens])
    return closure_generators(I, n, budget) == closure_generators(J, 1, budget)


@dataclass(frozen=True)
class PowerScanReport:
    checked_up_to: int
    failure_at: Optional[int]
    witness: Optional[Tuple[int, ...]]

    @property
    def failed(self):
        return self.failure_at is not None


def normality_via_powers(I: MonomialIdeal, n_max: int, budget=None) -> PowerScanReport:
    """Compare ``closure(I^n)`` with ``I^n`` for ``n = 1..n_max``.

    Finds the first ``n`` where they differ together with the smallest
    (degree, then lexicographic) closure generator outside ``I^n``.  A clean
    scan is evidence, not a proof, of normality.
    """
    if n_max < 1:
        raise ValueError("n_max must be at least 1")
    for n in range(1, n_max + 1):
        C = closure_generators(I, n, budget)
        P = power(I, n)
        missing = sorted((g for g in C.gens if not P.contains(g)), key=lambda g: (sum(g), g))
        if missing:
            return PowerScanReport(n, n, missing[0])
    return PowerScanReport(n_max, None, None)


# -- integer rounding --------------------------------------------------------------


def irp_ge(I: MonomialIdeal, budget=None) -> bool:
    """Integer rounding of ``x >= 0; x A >= 1``, which holds iff ``I`` is normal."""
    from .cone import normality_via_rees

    if not I.is_proper:
        raise UnsupportedInput(f"irp_ge needs a proper ideal, got the {I.kind} ideal")
    return normality_via_rees(I, budget).normal


@dataclass(frozen=True)
class IRPReport:
    holds: bool
    routes: Dict[str, bool]
    note: str = ""


def _columns(A):
    return [tuple(A[i][j] for i in range(len(A))) for j in range(len(A[0]))]


def irp_le(A, budget=None) -> IRPReport:
    """Integer rounding of ``x >= 0; x A <= 1``.

    * 0/1 matrices: it holds iff ``x >= 0; x A* >= 1`` rounds (``A*`` is the
      entrywise complement), i.e. iff the ideal with columns of ``A*`` is
      normal.  A zero column of ``A*`` makes every right-hand side
      unbounded, so the property holds vacuously.
    * degree-2 incidence matrices (nonnegative, column sums 2): it holds iff
      the ``B`` set of the ideal is a Hilbert basis.  Zero rows only add
      void constraints and are dropped.

    When both apply the two answers must agree.
    """
    A = [[int(x) for x in row] for row in A]
    if not A or not A[0]:
        raise UnsupportedInput("empty matrix")
    cols = _columns(A)
    is01 = all(x in (0, 1) for row in A for x in row)
    deg2 = all(x >= 0 for row in A for x in row) and all(sum(c) == 2 for c in cols)
    if not (is01 or deg2):
        raise UnsupportedInput(
            "irp_le supports 0/1 matrices (duality route) and degree-2 incidence matrices "
            "(Hilbert-basis route) only"
        )
    routes = {}
    if is01:
        star = [tuple(1 - x for x in c) for c in cols]
        if any(not any(c) for c in star):
            routes["duality"] = True
        else:
            routes["duality"] = irp_ge(make_ideal(len(A), star), budget)
    if deg2:
        from .cone import normality_via_bset

        used = [i for i in range(len(A)) if any(A[i])]
        J = make_ideal(len(used), [tuple(c[i] for i in used) for c in cols])
        routes["hilbert-basis"] = normality_via_bset(J, budget).normal
    values = set(routes.values())
    if len(values) != 1:
        raise AssertionError(f"integer-rounding routes disagree: {routes}")
    return IRPReport(values.pop(), routes)


def _max_packing(cols, alpha):
    """``max{|y| : y in N^q, A y <= alpha}``."""
    k = 0
    while find_multiset(cols, alpha, k + 1) is not None:
        k += 1
    return k


def _min_covering(cols, alpha, start):
    """``min{|y| : y in N^q, A y >= alpha}``, searching upward from ``start``."""
    cols = sorted(cols, key=lambda c: -sum(c))

    def search(r, k, first):
        if all(x <= 0 for x in r):
            return True
        if k == 0:
            return False
        for idx in range(first, len(cols)):
            c = cols[idx]
            if any(c[i] > 0 and r[i] > 0 for i in range(len(r))):
                if search(tuple(x - y for x, y in zip(r, c)), k - 1, idx):
                    return True
        return False

    k = max(start, 0)
    while not search(tuple(alpha), k, 0):
        k += 1
    return k


@dataclass(frozen=True)
class RoundingScan:
    direction: str
    box: int
    checked: int
    counterexample: Optional[Tuple[int, ...]]
    lp_value: Optional[Fraction] = None
    ip_value: Optional[int] = None


def irp_box_scan(A, direction: str, box: int, budget=None) -> RoundingScan:
    """Compare both sides of the rounding identity for every ``alpha`` in ``[0, box]^s``.

    A finite scan can only refute the property, never prove it.
    """
    budget = as_budget(budget)
    A = [[int(x) for x in row] for row in A]
    s, q = len(A), len(A[0])
    cols = _columns(A)
    checked = 0
    for alpha in itertools.product(range(box + 1), repeat=s):
        budget.check_time("rounding scan")
        if direction == "ge":
            if any(not any(c) for c in cols):
                continue  # unbounded for every alpha
            lp = lp_max(A, list(alpha), [1] * q).value
            ip = _max_packing(cols, alpha)
            ok = ip == floor(lp)
        elif direction == "le":
            if any(alpha[i] > 0 and not any(A[i]) for i in range(s)):
                continue  # infeasible, left side not finite
            lp = lp_min(A, list(alpha), [1] * q).value
            ip = _min_covering(cols, alpha, ceil(lp))
            ok = ip == ceil(lp)
        else:
            raise ValueError("direction must be 'ge' or 'le'")
        checked += 1
        if not ok:
            return RoundingScan(direction, box, checked, tuple(alpha), lp, ip)
    return RoundingScan(direction, box, checked, None)


# -- disjoint products ----------------------------------------------------------------


def _gen_support(I):
    return {i for g in I.gens for i, x in enumerate(g) if x}


def _require_disjoint(I1, I2):
    if I1.num_vars != I2.num_vars:
        raise ValueError("ideals live in different rings")
    if _gen_support(I1) & _gen_support(I2):
        raise ValueError("the two ideals share variables")


def disjoint_product_normality(I1: MonomialIdeal, I2: MonomialIdeal, budget=None) -> bool:
    """Normality of ``I1 * I2`` for ideals in disjoint variables: both factors normal."""
    from .cone import normality_via_rees

    _require_disjoint(I1, I2)
    verdicts = []
    for J in (I1, I2):
        verdicts.append(True if J.kind == "unit" else normality_via_rees(J, budget).normal)
    return all(verdicts)


def disjoint_product_laws(I1: MonomialIdeal, I2: MonomialIdeal, n_max: int = 2, budget=None) -> Dict[str, bool]:
    """Check the product laws for ideals in disjoint variables by direct computation.

    ``intersection``: ``I1 I2 = I1 ∩ I2``; ``closure_product``:
    ``closure(I1) closure(I2) ⊆ closure(I1 I2)``; ``closure_powers``:
    ``closure((I1 I2)^n) = closure(I1^n) closure(I2^n)`` for ``n <= n_max``.
    """
    from .ideal import intersection

    _require_disjoint(I1, I2)
    P = product(I1, I2)
    laws = {"intersection": P == intersection(I1, I2)}
    laws["closure_product"] = is_subideal(
        product(closure_generators(I1, 1, budget), closure_generators(I2, 1, budget)),
        closure_generators(P, 1, budget),
    )
    laws["closure_powers"] = all(
        closure_generators(power(P, n), 1, budget)
        == product(closure_generators(I1, n, budget), closure_generators(I2, n, budget))
        for n in range(1, n_max + 1)
    )
    return laws


def is_integral_vertex_blocker_match(I: MonomialIdeal, covers) -> bool:
    """Integral vertices of ``Q(I)`` versus characteristic vectors of ``covers``."""
    ints = {tuple(int(x) for x in u) for u in covering_vertices(I).integral_vertices()}
    chars = {tuple(1 if i + 1 in c else 0 for i in range(I.num_vars)) for c in covers}
    return ints == chars

