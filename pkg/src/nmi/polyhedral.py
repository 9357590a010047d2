"""Exact integer polyhedral geometry.

Everything is done with Python integers: fraction-free determinants and
adjugates, integer kernels, the double-description method for extreme rays,
a placing triangulation of a cone, and the lattice points of the half-open
fundamental parallelepiped of a simplicial cone.
"""

from fractions import Fraction
from itertools import combinations
from math import gcd
from typing import Dict, List, Sequence, Tuple

import numpy as np

from . import kernels

IntVector = Tuple[int, ...]


def dot(u, v) -> int:
    return sum(a * b for a, b in zip(u, v))


def primitive(v) -> IntVector:
    """Divide an integer vector by the gcd of its entries."""
    g = 0
    for x in v:
        g = gcd(g, x)
    if g <= 1:
        return tuple(v)
    return tuple(x // g for x in v)


def det_adj(M) -> Tuple[int, List[List[int]]]:
    """Determinant and adjugate of a square integer matrix.

    Fraction-free Gauss-Jordan elimination on ``[M | I]``: every
    intermediate entry is a minor, so all divisions are exact.
    """
    n = len(M)
    if n == 0:
        return 1, []
    rows = [list(M[i]) + [1 if j == i else 0 for j in range(n)] for i in range(n)]
    sign = 1
    prev = 1
    for k in range(n):
        piv = next((i for i in range(k, n) if rows[i][k] != 0), None)
        if piv is None:
            return 0, _adj_singular(M)
        if piv != k:
            rows[k], rows[piv] = rows[piv], rows[k]
            sign = -sign
        rk = rows[k]
        p = rk[k]
        for i in range(n):
            if i == k:
                continue
            ri = rows[i]
            f = ri[k]
            if f:
                for j in range(2 * n):
                    ri[j] = (p * ri[j] - f * rk[j]) // prev
            else:
                for j in range(2 * n):
                    if ri[j]:
                        ri[j] = (p * ri[j]) // prev
        prev = p
    det = sign * prev
    adj = [[sign * rows[i][n + j] for j in range(n)] for i in range(n)]
    return det, adj


def _adj_singular(M):
    """Adjugate of a singular matrix from cofactors (rarely needed)."""
    n = len(M)
    if n == 1:
        return [[1]]
    adj = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            minor = [[M[r][c] for c in range(n) if c != i] for r in range(n) if r != j]
            adj[i][j] = (-1) ** (i + j) * det_adj(minor)[0]
    return adj


def determinant(M) -> int:
    return det_adj(M)[0]


def int_rank(vectors) -> int:
    rows = [[Fraction(x) for x in v] for v in vectors]
    if not rows:
        return 0
    return _rank_rows(rows)


def _rank_rows(rows):
    ncols = len(rows[0])
    r = 0
    for col in range(ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][col] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        for i in range(r + 1, len(rows)):
            if rows[i][col]:
                f = rows[i][col] / rows[r][col]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        r += 1
        if r == len(rows):
            break
    return r


def independent_subset(vectors, order=None) -> List[int]:
    """Greedy indices of a maximal linearly independent subfamily."""
    order = range(len(vectors)) if order is None else order
    basis: List[List[Fraction]] = []  # echelon rows with pivot columns
    pivots: List[int] = []
    chosen = []
    for idx in order:
        v = [Fraction(x) for x in vectors[idx]]
        for row, pc in zip(basis, pivots):
            if v[pc]:
                f = v[pc] / row[pc]
                v = [a - f * b for a, b in zip(v, row)]
        pc = next((j for j, x in enumerate(v) if x), None)
        if pc is not None:
            basis.append(v)
            pivots.append(pc)
            chosen.append(idx)
    return chosen


def integer_kernel(M, ncols=None) -> List[IntVector]:
    """A lattice basis of ``{x in Z^n : M x = 0}`` via unimodular column operations."""
    n = len(M[0]) if M else ncols
    cols = [list(r) for r in zip(*M)] if M else [[] for _ in range(n)]
    basis = [[1 if i == j else 0 for i in range(n)] for j in range(n)]
    active = list(range(n))
    for r in range(len(M)):
        while True:
            nz = [c for c in active if cols[c][r] != 0]
            if len(nz) <= 1:
                break
            piv = min(nz, key=lambda c: abs(cols[c][r]))
            for c in nz:
                if c == piv:
                    continue
                q = cols[c][r] // cols[piv][r]
                if q:
                    cols[c] = [a - q * b for a, b in zip(cols[c], cols[piv])]
                    basis[c] = [a - q * b for a, b in zip(basis[c], basis[piv])]
        if nz:
            active.remove(nz[0])
    return [tuple(basis[c]) for c in active]


# -- double description ------------------------------------------------------


def extreme_rays(H, budget=None) -> List[IntVector]:
    """Extreme rays of the pointed cone ``{y : H y >= 0}`` (integer ``H``).

    Double-description method with the combinatorial adjacency test.  ``H``
    must have full column rank; rays are returned primitive and sorted.
    """
    H = [tuple(int(x) for x in row) for row in H]
    n = len(H[0])
    init = independent_subset(H)
    if len(init) < n:
        raise ValueError("constraint matrix does not have full column rank (cone not pointed)")
    det, adj = det_adj([H[i] for i in init])
    s = 1 if det > 0 else -1
    rays = []
    tight = []
    for j in range(n):
        r = primitive(tuple(s * adj[i][j] for i in range(n)))
        rays.append(r)
        tight.append(sum(1 << init[k] for k in range(n) if k != j))
    done = set(init)
    for idx, h in enumerate(H):
        if idx in done:
            continue
        if budget is not None:
            budget.check_time("double description")
        vals = [dot(h, r) for r in rays]
        pos = [i for i, v in enumerate(vals) if v > 0]
        neg = [i for i, v in enumerate(vals) if v < 0]
        zero = [i for i, v in enumerate(vals) if v == 0]
        new_rays = [rays[i] for i in pos + zero]
        new_tight = [tight[i] for i in pos] + [tight[i] | (1 << idx) for i in zero]
        if neg:
            pool = pos + zero + neg
            for i in pos:
                for j in neg:
                    common = tight[i] & tight[j]
                    if bin(common).count("1") < n - 2:
                        continue
                    if any(k != i and k != j and (tight[k] & common) == common for k in pool):
                        continue
                    r = primitive(tuple(vals[i] * b - vals[j] * a for a, b in zip(rays[i], rays[j])))
                    new_rays.append(r)
                    new_tight.append(common | (1 << idx))
        rays, tight = new_rays, new_tight
        done.add(idx)
        if budget is not None:
            budget.check_points(len(rays), "double-description rays")
    return sorted(set(rays))


def cone_facets(generators) -> List[IntVector]:
    """Primitive inner facet normals of a full-dimensional cone, by double description."""
    return extreme_rays(generators)


# -- triangulation -------------------------------------------------------------


class Triangulation:
    """A placing triangulation of a full-dimensional pointed cone.

    ``simplices`` are tuples of generator indices; ``facets`` are the
    primitive inner normals of the cone's facets, read off the final
    boundary complex.
    """

    def __init__(self, simplices, boundary):
        self.simplices = simplices
        self.boundary = boundary
        self.facets = sorted(set(boundary.values()))


def placing_triangulation(gens: Sequence[IntVector], budget=None) -> Triangulation:
    """Triangulate ``cone(gens)`` by placing the generators one at a time.

    The boundary is kept as a set of ``(d-1)``-faces with exact integer
    normals (positive on the cone).  A new generator ``x`` sees the faces
    with ``<N, x> < 0``; every visible face spans a new simplex with ``x``,
    and every horizon ridge spans a new boundary face whose normal is the
    combination of its two neighbouring face normals vanishing at ``x``.
    """
    d = len(gens[0])
    init = independent_subset(gens)
    if len(init) != d:
        raise ValueError("generators do not span the ambient space")
    det, adj = det_adj([list(col) for col in zip(*[gens[i] for i in init])])
    s = 1 if det > 0 else -1
    faces: Dict[Tuple[int, ...], IntVector] = {}
    for j in range(d):
        face = tuple(sorted(init[k] for k in range(d) if k != j))
        faces[face] = primitive(tuple(s * x for x in adj[j]))
    ridges: Dict[Tuple[int, ...], List[Tuple[int, ...]]] = {}

    def link(face):
        for k in range(len(face)):
            ridges.setdefault(face[:k] + face[k + 1 :], []).append(face)

    def unlink(face):
        for k in range(len(face)):
            lst = ridges[face[:k] + face[k + 1 :]]
            lst.remove(face)
            if not lst:
                del ridges[face[:k] + face[k + 1 :]]

    for face in faces:
        link(face)
    simplices = [tuple(sorted(init))]
    placed = set(init)
    for idx, x in enumerate(gens):
        if idx in placed:
            continue
        if budget is not None:
            budget.check_time("triangulation")
        vis = {f: dot(n, x) for f, n in faces.items()}
        visible = [f for f, v in vis.items() if v < 0]
        if not visible:
            continue
        vset = set(visible)
        new_faces = []
        for f in visible:
            simplices.append(tuple(sorted(f + (idx,))))
            nf = faces[f]
            for k in range(len(f)):
                ridge = f[:k] + f[k + 1 :]
                other = [g for g in ridges[ridge] if g != f]
                g = other[0]
                if g in vset:
                    continue
                ng = faces[g]
                h = tuple(vis[g] * a - vis[f] * b for a, b in zip(nf, ng))
                new_faces.append((tuple(sorted(ridge + (idx,))), primitive(h)))
        for f in visible:
            unlink(f)
            del faces[f]
        for f, n in new_faces:
            faces[f] = n
            link(f)
        placed.add(idx)
        if budget is not None:
            budget.check_points(len(simplices), "triangulation simplices")
    return Triangulation(simplices, faces)


# -- parallelepipeds -----------------------------------------------------------


def parallelepiped_points(columns: Sequence[IntVector], budget=None):
    """Nonzero lattice points of the half-open parallelepiped of a simplicial cone.

    ``columns`` are ``d`` linearly independent integer vectors.  Returns
    ``(D, points, coords)`` where ``D = |det|``, ``points`` is an int array of
    the lattice points and ``coords`` the matching integer vectors ``D*lambda``
    of barycentric coordinates (entries in ``[0, D)``).
    """
    d = len(columns)
    M = [list(r) for r in zip(*columns)]
    det, adj = det_adj(M)
    if det == 0:
        raise ValueError("simplicial cone generators are dependent")
    D = abs(det)
    if D == 1:
        return 1, np.zeros((0, d), dtype=object), np.zeros((0, d), dtype=np.int64)
    if budget is not None:
        budget.check_points(D, "parallelepiped points")
    s = 1 if det > 0 else -1
    # image of e_k in (Z/D)^d is column k of sign*adj
    gens = [[(s * adj[i][k]) % D for i in range(d)] for k in range(d)]
    group = kernels.cyclic_span(gens, D)
    group = group[np.any(group != 0, axis=1)]
    Mi = np.array(M, dtype=object)
    pts = (Mi.dot(group.astype(object).T).T) // D
    return D, pts, group


def fits_int64(values, margin=4) -> bool:
    limit = (1 << 62) // margin
    return all(-limit < int(v) < limit for v in values)
