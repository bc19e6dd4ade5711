"""Pure-numpy implementations of the batch permutation kernels.

Rows of an ``(N, n)`` integer array are permutations in image form.
"""

import numpy as np


def expand_products(elems, reps):
    """Row ``j*N + i`` of the result is ``elems[i] * reps[j]`` (apply elems first)."""
    k, n = reps.shape
    return reps[:, elems].reshape(k * elems.shape[0], n)


def commute_mask(elems, gens):
    mask = np.ones(elems.shape[0], dtype=np.bool_)
    for k in gens:
        mask &= np.all(elems[:, k] == k[elems], axis=1)
    return mask


def conjugate_rows(elems, g, ginv):
    """Rows ``g^-1 * e * g``."""
    return g[elems[:, ginv]]


def sift_rank(elems, bases, orbit_index, trans_inv, strides):
    """Position of each row in transversal-product order, or -1 for non-members."""
    cur = elems.copy()
    n_rows = cur.shape[0]
    rank = np.zeros(n_rows, dtype=np.int64)
    alive = np.ones(n_rows, dtype=np.bool_)
    for lvl in range(bases.shape[0]):
        img = cur[:, bases[lvl]]
        j = orbit_index[lvl][img]
        alive &= j >= 0
        j = np.where(j >= 0, j, 0)
        rank += j.astype(np.int64) * strides[lvl]
        cur = trans_inv[lvl][j[:, None], cur]
    ident = np.arange(cur.shape[1], dtype=cur.dtype)
    alive &= np.all(cur == ident, axis=1)
    return np.where(alive, rank, -1)


def cycle_lengths(elems):
    """Length of the cycle through each point, per row."""
    n_rows, n = elems.shape
    ident = np.arange(n, dtype=elems.dtype)
    lengths = np.zeros((n_rows, n), dtype=np.int32)
    cur = elems.copy()
    for k in range(1, n + 1):
        hit = (cur == ident) & (lengths == 0)
        lengths[hit] = k
        if not (lengths == 0).any():
            break
        cur = np.take_along_axis(elems, cur, axis=1)
    return lengths
