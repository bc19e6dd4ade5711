"""Numba-compiled twins of :mod:`symx._kernels._numpy` (same signatures)."""

import numpy as np
from numba import njit

_opts = dict(cache=True, nogil=True, boundscheck=False)


@njit(**_opts)
def expand_products(elems, reps):
    n_rows, n = elems.shape
    k = reps.shape[0]
    out = np.empty((k * n_rows, n), dtype=elems.dtype)
    for j in range(k):
        for i in range(n_rows):
            row = j * n_rows + i
            for x in range(n):
                out[row, x] = reps[j, elems[i, x]]
    return out


@njit(**_opts)
def commute_mask(elems, gens):
    n_rows, n = elems.shape
    mask = np.ones(n_rows, dtype=np.bool_)
    for i in range(n_rows):
        for g in range(gens.shape[0]):
            ok = True
            for x in range(n):
                if elems[i, gens[g, x]] != gens[g, elems[i, x]]:
                    ok = False
                    break
            if not ok:
                mask[i] = False
                break
    return mask


@njit(**_opts)
def conjugate_rows(elems, g, ginv):
    n_rows, n = elems.shape
    out = np.empty_like(elems)
    for i in range(n_rows):
        for x in range(n):
            out[i, x] = g[elems[i, ginv[x]]]
    return out


@njit(**_opts)
def sift_rank(elems, bases, orbit_index, trans_inv, strides):
    n_rows, n = elems.shape
    levels = bases.shape[0]
    out = np.empty(n_rows, dtype=np.int64)
    cur = np.empty(n, dtype=elems.dtype)
    tmp = np.empty(n, dtype=elems.dtype)
    for i in range(n_rows):
        for x in range(n):
            cur[x] = elems[i, x]
        rank = 0
        ok = True
        for lvl in range(levels):
            j = orbit_index[lvl, cur[bases[lvl]]]
            if j < 0:
                ok = False
                break
            rank += j * strides[lvl]
            for x in range(n):
                tmp[x] = trans_inv[lvl, j, cur[x]]
            for x in range(n):
                cur[x] = tmp[x]
        if ok:
            for x in range(n):
                if cur[x] != x:
                    ok = False
                    break
        out[i] = rank if ok else -1
    return out


@njit(**_opts)
def cycle_lengths(elems):
    n_rows, n = elems.shape
    lengths = np.zeros((n_rows, n), dtype=np.int32)
    for i in range(n_rows):
        for start in range(n):
            if lengths[i, start] != 0:
                continue
            size = 1
            x = elems[i, start]
            while x != start:
                size += 1
                x = elems[i, x]
            lengths[i, start] = size
            x = elems[i, start]
            while x != start:
                lengths[i, x] = size
                x = elems[i, x]
    return lengths
