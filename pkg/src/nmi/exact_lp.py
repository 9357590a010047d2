"""Exact rational linear programming with duality certificates.

Everything here works over :class:`fractions.Fraction`; no floating point is
ever involved.  The solver is a dense tableau simplex with Bland's rule, which
is slow but terminates on every input and yields exact primal/dual pairs.

Two problem shapes are exposed:

* :func:`lp_max` solves ``max <c,y>  s.t.  A y <= b, y >= 0`` whose dual is
  ``min <b,x>  s.t.  x^T A >= c^T, x >= 0``;
* :func:`lp_min` solves ``min <c,y>  s.t.  A y >= b, y >= 0`` whose dual is
  ``max <b,x>  s.t.  x^T A <= c^T, x >= 0``.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence, Tuple

OPTIMAL = "optimal"
INFEASIBLE = "infeasible"
UNBOUNDED = "unbounded"

QVector = Tuple[Fraction, ...]
QMatrix = Tuple[QVector, ...]


@dataclass(frozen=True)
class LPSolution:
    """Result of an exact LP solve.

    ``primal_point``, ``dual_point`` and ``value`` are present iff the status
    is optimal.  An infeasible problem carries a Farkas vector in ``farkas``
    and an unbounded one a recession direction in ``ray``; the meaning of both
    depends on the problem shape and is documented on the solver functions.
    """

    status: str
    value: Optional[Fraction] = None
    primal_point: Optional[QVector] = None
    dual_point: Optional[QVector] = None
    farkas: Optional[QVector] = None
    ray: Optional[QVector] = None

    @property
    def optimal(self):
        return self.status == OPTIMAL


def qvector(entries) -> QVector:
    return tuple(Fraction(x) for x in entries)


def qmatrix(rows) -> QMatrix:
    out = tuple(qvector(r) for r in rows)
    if out and len({len(r) for r in out}) != 1:
        raise ValueError("ragged matrix")
    return out


def transpose(M) -> QMatrix:
    if not M:
        return ()
    return tuple(zip(*M))


def dot(u, v):
    return sum((a * b for a, b in zip(u, v)), Fraction(0))


def mat_vec(M, v) -> QVector:
    return tuple(dot(row, v) for row in M)


def vec_mat(v, M) -> QVector:
    cols = len(M[0]) if M else 0
    return tuple(sum((v[i] * M[i][j] for i in range(len(M))), Fraction(0)) for j in range(cols))


def rank(M) -> int:
    """Exact rank over the rationals (Gaussian elimination)."""
    rows = [list(qvector(r)) for r in M]
    if not rows:
        return 0
    ncols = len(rows[0])
    r = 0
    for col in range(ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][col] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        p = rows[r][col]
        for i in range(r + 1, len(rows)):
            f = rows[i][col]
            if f:
                f /= p
                ri, rr = rows[i], rows[r]
                for j in range(col, ncols):
                    ri[j] -= f * rr[j]
        r += 1
        if r == len(rows):
            break
    return r


def solve_square(M, rhs) -> Optional[QVector]:
    """Solve ``M x = rhs`` for square ``M``; ``None`` when ``M`` is singular."""
    n = len(M)
    aug = [list(qvector(M[i])) + [Fraction(rhs[i])] for i in range(n)]
    for col in range(n):
        piv = next((i for i in range(col, n) if aug[i][col] != 0), None)
        if piv is None:
            return None
        aug[col], aug[piv] = aug[piv], aug[col]
        p = aug[col][col]
        row = aug[col]
        for j in range(col, n + 1):
            row[j] /= p
        for i in range(n):
            if i != col and aug[i][col] != 0:
                f = aug[i][col]
                ri = aug[i]
                for j in range(col, n + 1):
                    ri[j] -= f * row[j]
    return tuple(aug[i][n] for i in range(n))


class _Tableau:
    """Dense simplex tableau in the ``A y + s = b`` form, Bland's rule throughout."""

    def __init__(self, rows, rhs, basis):
        self.rows = rows
        self.rhs = rhs
        self.basis = basis
        self.red = None  # reduced costs c_B B^-1 a_j - c_j
        self.z = Fraction(0)

    def set_objective(self, c):
        ncols = len(self.rows[0]) if self.rows else len(c)
        red = [-Fraction(c[j]) if j < len(c) else Fraction(0) for j in range(ncols)]
        z = Fraction(0)
        for i, b in enumerate(self.basis):
            cb = c[b] if b < len(c) else 0
            if cb:
                row = self.rows[i]
                for j in range(ncols):
                    if row[j]:
                        red[j] += cb * row[j]
                z += cb * self.rhs[i]
        self.red = red
        self.z = z

    def pivot(self, r, j):
        row = self.rows[r]
        p = row[j]
        if p != 1:
            inv = 1 / p
            for k in range(len(row)):
                if row[k]:
                    row[k] *= inv
            self.rhs[r] *= inv
        nz = [k for k in range(len(row)) if row[k]]
        for i, other in enumerate(self.rows):
            if i == r:
                continue
            f = other[j]
            if f:
                for k in nz:
                    other[k] -= f * row[k]
                self.rhs[i] -= f * self.rhs[r]
        f = self.red[j]
        if f:
            for k in nz:
                self.red[k] -= f * row[k]
            self.z -= f * self.rhs[r]
        self.basis[r] = j

    def run(self, allowed):
        """Iterate to optimality; returns the unbounded entering column or None."""
        while True:
            j = next((k for k in range(allowed) if self.red[k] < 0), None)
            if j is None:
                return None
            best = None
            for i, row in enumerate(self.rows):
                a = row[j]
                if a > 0:
                    ratio = self.rhs[i] / a
                    key = (ratio, self.basis[i])
                    if best is None or key < best[0]:
                        best = (key, i)
            if best is None:
                return j
            self.pivot(best[1], j)


def lp_max(A, b, c) -> LPSolution:
    """Solve ``max <c,y> s.t. A y <= b, y >= 0`` exactly.

    Certificates: ``dual_point`` x satisfies ``x >= 0``, ``x^T A >= c^T`` and
    ``<b,x> = value``.  When infeasible, ``farkas`` is ``u >= 0`` with
    ``u^T A >= 0`` and ``<u,b> < 0``.  When unbounded, ``ray`` is ``r >= 0``
    with ``A r <= 0`` and ``<c,r> > 0``.
    """
    A = qmatrix(A)
    b = qvector(b)
    c = qvector(c)
    m = len(b)
    n = len(c)
    if len(A) != m or any(len(row) != n for row in A):
        raise ValueError(f"incompatible LP dimensions: A is {len(A)}x?, b has {m}, c has {n}")
    if m == 0:
        if any(x > 0 for x in c):
            ray = tuple(Fraction(1) if x > 0 else Fraction(0) for x in c)
            return LPSolution(UNBOUNDED, ray=ray)
        return LPSolution(OPTIMAL, Fraction(0), (Fraction(0),) * n, ())

    art = n + m
    rows = []
    for i in range(m):
        row = list(A[i]) + [Fraction(0)] * m + [Fraction(-1)]
        row[n + i] = Fraction(1)
        rows.append(row)
    tab = _Tableau(rows, list(b), [n + i for i in range(m)])

    if min(b) < 0:
        phase1 = [Fraction(0)] * art + [Fraction(-1)]
        tab.set_objective(phase1)
        r = min(range(m), key=lambda i: (b[i], i))
        tab.pivot(r, art)
        tab.run(art + 1)
        if tab.z < 0:
            farkas = tuple(tab.red[n + i] for i in range(m))
            return LPSolution(INFEASIBLE, farkas=farkas)
        if art in tab.basis:
            r = tab.basis.index(art)
            j = next(k for k in range(art) if tab.rows[r][k] != 0)
            tab.pivot(r, j)
    for row in tab.rows:
        row.pop()

    tab.set_objective(c)
    j = tab.run(art)
    if j is not None:
        ray = [Fraction(0)] * n
        if j < n:
            ray[j] = Fraction(1)
        for i, bi in enumerate(tab.basis):
            if bi < n:
                ray[bi] = -tab.rows[i][j]
        return LPSolution(UNBOUNDED, ray=tuple(ray))
    primal = [Fraction(0)] * n
    for i, bi in enumerate(tab.basis):
        if bi < n:
            primal[bi] = tab.rhs[i]
    dual = tuple(tab.red[n + i] for i in range(m))
    return LPSolution(OPTIMAL, tab.z, tuple(primal), dual)


def lp_min(A, b, c) -> LPSolution:
    """Solve ``min <c,y> s.t. A y >= b, y >= 0`` exactly.

    Certificates: ``dual_point`` x satisfies ``x >= 0``, ``x^T A <= c^T`` and
    ``<b,x> = value``.  When infeasible, ``farkas`` is ``u >= 0`` with
    ``u^T A <= 0`` and ``<u,b> > 0``.  When unbounded, ``ray`` is ``r >= 0``
    with ``A r >= 0`` and ``<c,r> < 0``.
    """
    A = qmatrix(A)
    neg_A = tuple(tuple(-x for x in row) for row in A)
    sol = lp_max(neg_A, [-Fraction(x) for x in b], [-Fraction(x) for x in c])
    if sol.status == OPTIMAL:
        return LPSolution(OPTIMAL, -sol.value, sol.primal_point, sol.dual_point)
    return sol


def verify_max_certificate(A, b, c, sol: LPSolution) -> bool:
    """Re-check an :func:`lp_max` answer by pure arithmetic."""
    A = qmatrix(A)
    b = qvector(b)
    c = qvector(c)
    if sol.status == OPTIMAL:
        y, x = sol.primal_point, sol.dual_point
        return (
            all(v >= 0 for v in y)
            and all(lhs <= rhs for lhs, rhs in zip(mat_vec(A, y), b))
            and all(v >= 0 for v in x)
            and all(lhs >= rhs for lhs, rhs in zip(vec_mat(x, A), c))
            and dot(c, y) == sol.value == dot(b, x)
        )
    if sol.status == INFEASIBLE:
        u = sol.farkas
        return all(v >= 0 for v in u) and all(v >= 0 for v in vec_mat(u, A)) and dot(u, b) < 0
    r = sol.ray
    return all(v >= 0 for v in r) and all(v <= 0 for v in mat_vec(A, r)) and dot(c, r) > 0


def verify_min_certificate(A, b, c, sol: LPSolution) -> bool:
    """Re-check an :func:`lp_min` answer by pure arithmetic."""
    A = qmatrix(A)
    b = qvector(b)
    c = qvector(c)
    if sol.status == OPTIMAL:
        y, x = sol.primal_point, sol.dual_point
        return (
            all(v >= 0 for v in y)
            and all(lhs >= rhs for lhs, rhs in zip(mat_vec(A, y), b))
            and all(v >= 0 for v in x)
            and all(lhs <= rhs for lhs, rhs in zip(vec_mat(x, A), c))
            and dot(c, y) == sol.value == dot(b, x)
        )
    if sol.status == INFEASIBLE:
        u = sol.farkas
        return all(v >= 0 for v in u) and all(v <= 0 for v in vec_mat(u, A)) and dot(u, b) > 0
    r = sol.ray
    return all(v >= 0 for v in r) and all(v >= 0 for v in mat_vec(A, r)) and dot(c, r) < 0


def format_rational(x) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
