# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled versions of the hot loops in :mod:`nmi._kernels_py`."""

import numpy as np
cimport numpy as cnp

cnp.import_array()


def cyclic_span(gens, long long D):
    """All elements of the subgroup of ``(Z/D)^d`` generated by ``gens``."""
    cdef Py_ssize_t d = len(gens[0]) if gens else 0
    cdef Py_ssize_t m, i, j, t, k
    cdef cnp.int64_t[:, :] S
    cdef cnp.int64_t[:, :] out
    cdef cnp.int64_t[:] c
    S_arr = np.zeros((1, d), dtype=np.int64)
    members = {S_arr[0].tobytes()}
    for g in gens:
        c_arr = np.asarray(g, dtype=np.int64) % D
        if not c_arr.any():
            continue
        k = 1
        step = c_arr.copy()
        while step.tobytes() not in members:
            k += 1
            step = (step + c_arr) % D
        if k == 1:
            continue
        m = S_arr.shape[0]
        out_arr = np.empty((m * k, d), dtype=np.int64)
        S = S_arr
        out = out_arr
        c = c_arr
        for t in range(k):
            for i in range(m):
                for j in range(d):
                    out[t * m + i, j] = (S[i, j] + t * c[j]) % D
        S_arr = out_arr
        members = {row.tobytes() for row in S_arr}
    return S_arr


def minimal_mask(H):
    """Mask of rows of ``H`` not dominated (componentwise ``>=``) by another row."""
    cdef cnp.int64_t[:, :] A = np.ascontiguousarray(H, dtype=np.int64)
    cdef Py_ssize_t n = A.shape[0]
    cdef Py_ssize_t f = A.shape[1]
    cdef Py_ssize_t i, j, t, m = 0
    cdef bint dominated, le
    kept_arr = np.empty(n, dtype=np.intp)
    cdef Py_ssize_t[:] kept = kept_arr
    mask_arr = np.zeros(n, dtype=bool)
    cdef cnp.npy_bool[:] mask = mask_arr
    for i in range(n):
        dominated = False
        for j in range(m):
            le = True
            for t in range(f):
                if A[kept[j], t] > A[i, t]:
                    le = False
                    break
            if le:
                dominated = True
                break
        if not dominated:
            kept[m] = i
            m += 1
            mask[i] = True
    return mask_arr
