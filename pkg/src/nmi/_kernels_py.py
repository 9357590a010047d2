"""Pure-Python/numpy implementations of the hot loops.

These are the reference versions; ``_kernels.pyx`` mirrors them in Cython
and :mod:`nmi.kernels` picks whichever is available.
"""

import numpy as np


def cyclic_span(gens, D):
    """All elements of the subgroup of ``(Z/D)^d`` generated by ``gens``.

    Built coset by coset: for each generator ``c`` find the least ``k`` with
    ``k*c`` already in the current subgroup ``S``; then ``S + {0..k-1}*c`` is
    the enlarged subgroup, with no repeats.  Returns an ``int64`` array.
    """
    d = len(gens[0]) if gens else 0
    S = np.zeros((1, d), dtype=np.int64)
    members = {S[0].tobytes()}
    for c in gens:
        c = np.asarray(c, dtype=np.int64) % D
        if not c.any():
            continue
        k = 1
        step = c.copy()
        while step.tobytes() not in members:
            k += 1
            step = (step + c) % D
        if k == 1:
            continue
        blocks = [S]
        for j in range(1, k):
            blocks.append((S + j * c) % D)
        S = np.concatenate(blocks)
        members = {row.tobytes() for row in S}
    return S


def minimal_mask(H):
    """Mask of rows of ``H`` not dominated (componentwise ``>=``) by another row.

    Rows must be distinct and sorted so that a dominating row always comes
    first (e.g. by a degree that is strictly monotone under domination).
    """
    H = np.asarray(H, dtype=np.int64)
    n = H.shape[0]
    mask = np.zeros(n, dtype=bool)
    kept = np.empty_like(H)
    m = 0
    for i in range(n):
        h = H[i]
        if m and np.all(kept[:m] <= h, axis=1).any():
            continue
        kept[m] = h
        m += 1
        mask[i] = True
    return mask
