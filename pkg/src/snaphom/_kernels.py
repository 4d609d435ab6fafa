"""Bit-packed Z/2 linear-algebra kernels.

Columns/rows are packed 64 bits per uint64 word. The hot loops (boundary-matrix
column reduction and GF(2) rank) come in two flavors: a numba ``@njit`` version
and a pure-numpy fallback. Set ``SNAPHOM_FORCE_NUMPY=1`` to force the fallback;
otherwise numba is used when importable. Both produce identical output.
"""

from __future__ import annotations

import os

import numpy as np

_FORCE_NUMPY = os.environ.get("SNAPHOM_FORCE_NUMPY", "").lower() in {"1", "true", "yes"}

try:
    if _FORCE_NUMPY:
        raise ImportError("numpy backend forced via SNAPHOM_FORCE_NUMPY")
    from numba import njit

    HAVE_NUMBA = True
except ImportError:
    HAVE_NUMBA = False


def pack_rows(index_lists, width_bits: int) -> np.ndarray:
    """Pack lists of bit indices into a (len(index_lists), ceil(width/64)) uint64 array."""
    n_words = max(1, (width_bits + 63) // 64)
    out = np.zeros((len(index_lists), n_words), dtype=np.uint64)
    for i, idxs in enumerate(index_lists):
        for r in idxs:
            out[i, r >> 6] |= np.uint64(1 << (r & 63))
    return out


# ---------------------------------------------------------------------------
# pure-numpy backend
# ---------------------------------------------------------------------------

def _low_numpy(col: np.ndarray) -> int:
    nz = np.flatnonzero(col)
    if nz.size == 0:
        return -1
    t = int(nz[-1])
    return t * 64 + int(col[t]).bit_length() - 1


def reduce_packed_numpy(cols: np.ndarray) -> np.ndarray:
    """Standard persistence column reduction; mutates cols, returns low indices."""
    n = cols.shape[0]
    low = np.full(n, -1, dtype=np.int64)
    owner: dict[int, int] = {}
    for j in range(n):
        lo = _low_numpy(cols[j])
        while lo >= 0 and lo in owner:
            cols[j] ^= cols[owner[lo]]
            lo = _low_numpy(cols[j])
        low[j] = lo
        if lo >= 0:
            owner[lo] = j
    return low


def rank_packed_numpy(rows: np.ndarray) -> int:
    """GF(2) rank of the packed row matrix (input not modified)."""
    pivots: dict[int, np.ndarray] = {}
    for i in range(rows.shape[0]):
        v = rows[i].copy()
        lo = _low_numpy(v)
        while lo >= 0 and lo in pivots:
            v ^= pivots[lo]
            lo = _low_numpy(v)
        if lo >= 0:
            pivots[lo] = v
    return len(pivots)


# ---------------------------------------------------------------------------
# numba backend
# ---------------------------------------------------------------------------

if HAVE_NUMBA:

    @njit(cache=True)
    def _low_nb(cols, j):  # pragma: no cover - exercised through the wrappers
        for t in range(cols.shape[1] - 1, -1, -1):
            word = cols[j, t]
            if word != np.uint64(0):
                b = -1
                while word != np.uint64(0):
                    word >>= np.uint64(1)
                    b += 1
                return t * 64 + b
        return -1

    @njit(cache=True)
    def _reduce_packed_nb(cols):  # pragma: no cover
        n, n_words = cols.shape
        low = np.full(n, -1, dtype=np.int64)
        owner = np.full(n_words * 64, -1, dtype=np.int64)
        for j in range(n):
            lo = _low_nb(cols, j)
            while lo >= 0 and owner[lo] >= 0:
                k = owner[lo]
                for t in range(n_words):
                    cols[j, t] ^= cols[k, t]
                lo = _low_nb(cols, j)
            low[j] = lo
            if lo >= 0:
                owner[lo] = j
        return low

    @njit(cache=True)
    def _rank_packed_nb(rows):  # pragma: no cover
        m, n_words = rows.shape
        work = rows.copy()
        pivot_row = np.full(n_words * 64, -1, dtype=np.int64)
        rank = 0
        for i in range(m):
            lo = _low_nb(work, i)
            while lo >= 0 and pivot_row[lo] >= 0:
                k = pivot_row[lo]
                for t in range(n_words):
                    work[i, t] ^= work[k, t]
                lo = _low_nb(work, i)
            if lo >= 0:
                pivot_row[lo] = i
                rank += 1
        return rank

    def reduce_packed_numba(cols: np.ndarray) -> np.ndarray:
        return _reduce_packed_nb(cols)

    def rank_packed_numba(rows: np.ndarray) -> int:
        return int(_rank_packed_nb(rows))

    reduce_packed = reduce_packed_numba
    rank_packed = rank_packed_numba
    BACKEND = "numba"
else:
    reduce_packed = reduce_packed_numpy
    rank_packed = rank_packed_numpy
    BACKEND = "numpy"
