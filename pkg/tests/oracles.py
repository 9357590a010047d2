"""Independent brute-force oracles for the engine tests.

Each oracle answers the same question as an engine function by a slower,
structurally different method (exhaustive enumeration, basic-solution
enumeration, subset scans), so agreement is meaningful evidence.
"""

import itertools
from fractions import Fraction

from nmi.combinatorics import Clutter, graph
from nmi.exact_lp import lp_max


def all_graphs(n):
    """Every labelled simple graph on vertices 1..n."""
    pairs = list(itertools.combinations(range(1, n + 1), 2))
    for mask in range(1 << len(pairs)):
        yield graph(n, [p for k, p in enumerate(pairs) if mask >> k & 1])


def _solve(M, rhs):
    """Unique solution of a square rational system by Gauss-Jordan, or None."""
    n = len(M)
    aug = [[Fraction(x) for x in row] + [Fraction(r)] for row, r in zip(M, rhs)]
    for col in range(n):
        piv = next((i for i in range(col, n) if aug[i][col] != 0), None)
        if piv is None:
            return None
        aug[col], aug[piv] = aug[piv], aug[col]
        p = aug[col][col]
        aug[col] = [x / p for x in aug[col]]
        for i in range(n):
            if i != col and aug[i][col] != 0:
                f = aug[i][col]
                aug[i] = [a - f * b for a, b in zip(aug[i], aug[col])]
    return [aug[i][n] for i in range(n)]


def lp_max_by_vertices(A, b, c):
    """``max <c,y>`` over ``{y >= 0, A y <= b}`` by enumerating basic feasible solutions.

    Returns None if the polyhedron has no vertex (empty).  Callers must pass
    bounded problems.
    """
    m, n = len(A), len(c)
    rows = [list(r) for r in A] + [[-1 if j == i else 0 for j in range(n)] for i in range(n)]
    rhs = list(b) + [0] * n
    best = None
    for pick in itertools.combinations(range(m + n), n):
        y = _solve([rows[i] for i in pick], [rhs[i] for i in pick])
        if y is None:
            continue
        if all(sum(Fraction(r[j]) * y[j] for j in range(n)) <= h for r, h in zip(rows, rhs)):
            val = sum(Fraction(c[j]) * y[j] for j in range(n))
            if best is None or val > best:
                best = val
    return best


def in_power_by_products(gens, a, n):
    """``t^a in I^n`` by trying every multiset of ``n`` generators."""
    for combo in itertools.combinations_with_replacement(gens, n):
        total = [sum(col) for col in zip(*combo)] if combo else [0] * len(a)
        if all(x <= y for x, y in zip(total, a)):
            return True
    return False


def closure_generators_by_scan(I, n):
    """Minimal ``a`` in a box with ``lp_max(A, a, 1) >= n`` (LP membership per lattice point)."""
    s = I.num_vars
    A = [[g[i] for g in I.gens] for i in range(s)]
    top = [n * max(g[i] for g in I.gens) + 1 for i in range(s)]
    members = []
    for a in itertools.product(*(range(t + 1) for t in top)):
        if lp_max(A, list(a), [1] * len(I.gens)).value >= n:
            members.append(a)
    mem = set(members)
    minimal = []
    for a in members:
        if not any(a[i] > 0 and tuple(a[j] - (j == i) for j in range(s)) in mem for i in range(s)):
            minimal.append(a)
    return sorted(minimal)


def in_cone(gens, x):
    """Whether ``x`` is a nonnegative rational combination of ``gens`` (exact LP)."""
    d = len(x)
    A = [[g[i] for g in gens] for i in range(d)] + [[-g[i] for g in gens] for i in range(d)]
    b = list(x) + [-v for v in x]
    return lp_max(A, b, [0] * len(gens)).status == "optimal"


def hilbert_basis_by_scan(gens, grading):
    """Irreducible lattice points of ``cone(gens)`` found by exhaustive scan.

    Every Hilbert basis element is ``sum c_i g_i`` with ``0 <= c_i <= 1``, so
    its degree is at most the sum of all generator degrees and each
    coordinate lies between the sums of negative and positive generator
    entries.
    """
    d = len(gens[0])
    bound = sum(sum(a * b for a, b in zip(grading, g)) for g in gens)
    lo = [sum(min(0, g[i]) for g in gens) for i in range(d)]
    hi = [sum(max(0, g[i]) for g in gens) for i in range(d)]
    pts = []
    for x in itertools.product(*(range(l, h + 1) for l, h in zip(lo, hi))):
        deg = sum(a * b for a, b in zip(grading, x))
        if 0 < deg <= bound and in_cone(gens, x):
            pts.append(x)
    pts.sort(key=lambda v: sum(a * b for a, b in zip(grading, v)))
    members = set(pts)
    hb = []
    for x in pts:
        if not any(tuple(a - b for a, b in zip(x, y)) in members for y in pts if y != x):
            hb.append(x)
    return sorted(hb)


def blocker_by_subsets(C: Clutter):
    """Minimal transversals by scanning every vertex subset."""
    verts = C.vertices
    trans = []
    for r in range(len(verts) + 1):
        for T in itertools.combinations(verts, r):
            T = frozenset(T)
            if all(T & e for e in C.edges) and not any(U < T for U in trans):
                trans.append(T)
    return frozenset(trans)
