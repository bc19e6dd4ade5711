"""Batch kernels over permutations stored as rows of an integer array.

Two interchangeable backends exist: numba-compiled loops and plain numpy.
Numba is used when importable unless ``SYMX_DISABLE_NUMBA`` is set to a
non-empty value other than ``0``.  Both produce identical outputs.
"""

import os

import numpy as np

from . import _numpy as numpy_impl

DTYPE = np.int32


def _want_numba():
    flag = os.environ.get("SYMX_DISABLE_NUMBA", "").strip()
    return flag in ("", "0")


def load_numba():
    """The numba backend module, or None when numba is unavailable."""
    try:
        from . import _numba
    except ImportError:
        return None
    return _numba


numba_impl = load_numba() if _want_numba() else None
BACKEND = "numba" if numba_impl is not None else "numpy"
_impl = numba_impl if numba_impl is not None else numpy_impl

expand_products = _impl.expand_products
commute_mask = _impl.commute_mask
conjugate_rows = _impl.conjugate_rows
sift_rank = _impl.sift_rank
cycle_lengths = _impl.cycle_lengths


def as_rows(perms, degree=None):
    if not perms:
        return np.empty((0, degree or 0), dtype=DTYPE)
    return np.asarray(perms, dtype=DTYPE)


def element_orders(elems):
    if elems.shape[0] == 0:
        return np.empty(0, dtype=np.int64)
    return np.lcm.reduce(cycle_lengths(elems).astype(np.int64), axis=1)


def cycle_type_counts(elems):
    """Row ``i`` counts the cycles of each length (index = length) in ``elems[i]``."""
    n_rows, n = elems.shape
    lengths = cycle_lengths(elems)
    counts = np.zeros((n_rows, n + 1), dtype=np.int64)
    rows = np.repeat(np.arange(n_rows), n)
    np.add.at(counts, (rows, lengths.ravel()), 1)
    counts[:, 1:] //= np.arange(1, n + 1)
    return counts
