"""Batch canonicalization of many words at once.

Words are rows of an ``int64`` matrix, right-padded with zeros, plus a
vector of lengths.  The numba kernel runs patience sorting per row with a
binary search over the bottom row; the numpy fallback advances every row in
lock step, one letter at a time.  Set ``PSMONOID_DISABLE_NUMBA=1`` to force
the fallback.
"""

from __future__ import annotations

import os

import numpy as np

try:
    from numba import njit

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - numba is a declared dependency
    HAVE_NUMBA = False

USE_NUMBA = HAVE_NUMBA and os.environ.get("PSMONOID_DISABLE_NUMBA", "") in ("", "0")


def _canonical_rows_python(words, lengths, strict):
    m, width = words.shape
    out = np.zeros_like(words)
    bottoms = np.empty(width, dtype=np.int64)
    heights = np.empty(width, dtype=np.int64)
    cols = np.empty((width, width), dtype=np.int64)
    for r in range(m):
        ncols = 0
        for t in range(lengths[r]):
            a = words[r, t]
            lo, hi = 0, ncols
            while lo < hi:
                mid = (lo + hi) // 2
                b = bottoms[mid]
                # Right variant: first bottom >= a; left: first bottom > a.
                if (b >= a) if strict else (b > a):
                    hi = mid
                else:
                    lo = mid + 1
            if lo == ncols:
                heights[ncols] = 0
                ncols += 1
            cols[lo, heights[lo]] = a
            heights[lo] += 1
            bottoms[lo] = a
        k = 0
        for c in range(ncols):
            for h in range(heights[c]):
                out[r, k] = cols[c, h]
                k += 1
    return out


if HAVE_NUMBA:
    _canonical_rows_numba = njit(cache=True)(_canonical_rows_python)


def canonical_rows_numpy(words: np.ndarray, lengths: np.ndarray, strict: bool) -> np.ndarray:
    """Vectorized over rows; ``O(width)`` comparisons per letter instead of a binary search."""
    words = np.asarray(words, dtype=np.int64)
    lengths = np.asarray(lengths, dtype=np.int64)
    m, width = words.shape
    out = np.zeros_like(words)
    if m == 0 or width == 0:
        return out
    big = np.iinfo(np.int64).max
    bottoms = np.full((m, width), big, dtype=np.int64)
    heights = np.zeros((m, width), dtype=np.int64)
    cols = np.zeros((m, width, width), dtype=np.int64)
    rows = np.arange(m)
    for t in range(width):
        live = rows[lengths > t]
        if live.size == 0:
            break
        a = words[live, t]
        b = bottoms[live]
        # Absent columns hold ``big`` and never count as "passed".
        passed = (b < a[:, None]) if strict else (b <= a[:, None])
        pos = passed.sum(axis=1)
        h = heights[live, pos]
        cols[live, pos, h] = a
        heights[live, pos] = h + 1
        bottoms[live, pos] = a
    # Entries were appended bottom-last, so each column already reads top to bottom.
    slot = np.arange(width)
    valid = slot[None, None, :] < heights[:, :, None]
    order_key = np.where(valid, np.arange(width * width).reshape(width, width)[None], big)
    flat_key = order_key.reshape(m, -1)
    idx = np.argsort(flat_key, axis=1, kind="stable")[:, :width]
    gathered = np.take_along_axis(cols.reshape(m, -1), idx, axis=1)
    mask = slot[None, :] < lengths[:, None]
    out[mask] = gathered[mask]
    return out


def canonical_rows(words: np.ndarray, lengths: np.ndarray, strict: bool, backend: str | None = None) -> np.ndarray:
    """Canonical words of every row; ``strict`` selects the rPS variant."""
    words = np.ascontiguousarray(words, dtype=np.int64)
    lengths = np.ascontiguousarray(lengths, dtype=np.int64)
    if backend is None:
        backend = "numba" if USE_NUMBA else "numpy"
    if backend == "numba":
        if not HAVE_NUMBA:
            raise RuntimeError("numba is not available")
        return _canonical_rows_numba(words, lengths, bool(strict))
    if backend == "numpy":
        return canonical_rows_numpy(words, lengths, bool(strict))
    if backend == "python":
        return _canonical_rows_python(words, lengths, bool(strict))
    raise ValueError(f"unknown backend {backend!r}")


def pack_words(words) -> tuple[np.ndarray, np.ndarray]:
    words = [tuple(w) for w in words]
    width = max((len(w) for w in words), default=0)
    arr = np.zeros((len(words), width), dtype=np.int64)
    lengths = np.zeros(len(words), dtype=np.int64)
    for r, w in enumerate(words):
        arr[r, : len(w)] = w
        lengths[r] = len(w)
    return arr, lengths


def unpack_rows(arr: np.ndarray, lengths: np.ndarray) -> list[tuple]:
    return [tuple(int(x) for x in arr[r, : lengths[r]]) for r in range(arr.shape[0])]


def all_words_matrix(rank: int, length: int) -> np.ndarray:
    """Every word of exactly ``length`` over ``A_rank`` as rows, lexicographic order."""
    if length == 0:
        return np.zeros((1, 0), dtype=np.int64)
    grids = np.indices((rank,) * length).reshape(length, -1).T
    return (grids + 1).astype(np.int64)
