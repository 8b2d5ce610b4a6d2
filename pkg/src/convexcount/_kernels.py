"""Hot loops of the brute-force oracles.

Two kernels, each in a numba-compiled and a pure-numpy flavour:

``validate_rows``
    Given a batch of candidate row-interval sequences, render each one as a
    cell grid and check the direct definition of a convex polyomino filling
    its box (non-empty, edge-connected, row- and column-convex, all four box
    sides touched).

``count_disjoint``
    Count pairs of lattice-point bitmasks with empty intersection.

The numba flavour is used when numba imports and ``CONVEXCOUNT_PURE_NUMPY``
is unset (or ``0``); set it to ``1`` to force the numpy path.  Both flavours
are always importable by name so tests and the benchmark can compare them.
"""
from __future__ import annotations

import os

import numpy as np

try:
    from numba import njit

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - numba is a declared dependency
    HAVE_NUMBA = False

__all__ = [
    "HAVE_NUMBA",
    "backend",
    "validate_rows",
    "validate_rows_numpy",
    "validate_rows_numba",
    "count_disjoint",
    "count_disjoint_numpy",
    "count_disjoint_numba",
]


def _numba_requested() -> bool:
    flag = os.environ.get("CONVEXCOUNT_PURE_NUMPY", "").strip().lower()
    return flag in ("", "0", "false", "no")


# --------------------------------------------------------------------------
# numpy flavour


def validate_rows_numpy(lefts: np.ndarray, rights: np.ndarray, width: int) -> np.ndarray:
    """Vectorised check of ``K`` candidates given as ``(K, H)`` interval arrays.

    Row ``r`` of candidate ``k`` occupies columns ``lefts[k, r] ..
    rights[k, r]`` inclusive (empty when ``left > right``).
    """
    lefts = np.asarray(lefts, dtype=np.int64)
    rights = np.asarray(rights, dtype=np.int64)
    if lefts.shape[0] == 0:
        return np.zeros(0, dtype=bool)
    cols = np.arange(width, dtype=np.int64)
    grid = (cols >= lefts[:, :, None]) & (cols <= rights[:, :, None])  # (K, H, W)

    nonempty = grid.any(axis=(1, 2))

    g8 = grid.astype(np.int8)
    # A line is one segment iff it has at most one 0->1 rise.
    row_rises = (np.diff(g8, axis=2, prepend=0) == 1).sum(axis=2)
    col_rises = (np.diff(g8, axis=1, prepend=0) == 1).sum(axis=1)
    convex = (row_rises <= 1).all(axis=1) & (col_rises <= 1).all(axis=1)

    sides = (
        grid[:, 0, :].any(axis=1)
        & grid[:, -1, :].any(axis=1)
        & grid[:, :, 0].any(axis=1)
        & grid[:, :, -1].any(axis=1)
    )

    # Flood fill from the first occupied cell by repeated 4-neighbour dilation.
    k, h, w = grid.shape
    flat = grid.reshape(k, -1)
    seed = np.zeros_like(flat)
    first = flat.argmax(axis=1)
    seed[np.arange(k), first] = flat[np.arange(k), first]
    reach = seed.reshape(k, h, w)
    while True:
        grown = reach.copy()
        grown[:, 1:, :] |= reach[:, :-1, :]
        grown[:, :-1, :] |= reach[:, 1:, :]
        grown[:, :, 1:] |= reach[:, :, :-1]
        grown[:, :, :-1] |= reach[:, :, 1:]
        grown &= grid
        if np.array_equal(grown, reach):
            break
        reach = grown
    connected = (reach == grid).all(axis=(1, 2))

    return nonempty & convex & sides & connected


def count_disjoint_numpy(masks_a: np.ndarray, masks_b: np.ndarray) -> int:
    """Number of pairs ``(i, j)`` with ``masks_a[i] & masks_b[j] == 0``."""
    a = np.asarray(masks_a, dtype=np.uint64)
    b = np.asarray(masks_b, dtype=np.uint64)
    if a.size == 0 or b.size == 0:
        return 0
    return int(np.count_nonzero((a[:, None] & b[None, :]) == 0))


# --------------------------------------------------------------------------
# numba flavour

if HAVE_NUMBA:

    @njit(cache=True)
    def _validate_one(grid, stack):
        h, w = grid.shape
        count = 0
        for r in range(h):
            for c in range(w):
                count += grid[r, c]
        if count == 0:
            return False
        top = False
        bottom = False
        left = False
        right = False
        for c in range(w):
            if grid[0, c]:
                bottom = True
            if grid[h - 1, c]:
                top = True
        for r in range(h):
            if grid[r, 0]:
                left = True
            if grid[r, w - 1]:
                right = True
        if not (top and bottom and left and right):
            return False
        for r in range(h):
            rises = 0
            prev = 0
            for c in range(w):
                if grid[r, c] and not prev:
                    rises += 1
                prev = grid[r, c]
            if rises > 1:
                return False
        for c in range(w):
            rises = 0
            prev = 0
            for r in range(h):
                if grid[r, c] and not prev:
                    rises += 1
                prev = grid[r, c]
            if rises > 1:
                return False
        # Depth-first flood fill; grid cells are marked 2 once visited.
        sr = -1
        sc = -1
        for r in range(h):
            for c in range(w):
                if grid[r, c] and sr < 0:
                    sr = r
                    sc = c
        top_of_stack = 0
        stack[0, 0] = sr
        stack[0, 1] = sc
        grid[sr, sc] = 2
        seen = 1
        while top_of_stack >= 0:
            r = stack[top_of_stack, 0]
            c = stack[top_of_stack, 1]
            top_of_stack -= 1
            for dr, dc in ((1, 0), (-1, 0), (0, 1), (0, -1)):
                rr = r + dr
                cc = c + dc
                if 0 <= rr < h and 0 <= cc < w and grid[rr, cc] == 1:
                    grid[rr, cc] = 2
                    seen += 1
                    top_of_stack += 1
                    stack[top_of_stack, 0] = rr
                    stack[top_of_stack, 1] = cc
        return seen == count

    @njit(cache=True)
    def _validate_rows_jit(lefts, rights, width, out):
        k, h = lefts.shape
        grid = np.zeros((h, width), dtype=np.uint8)
        stack = np.empty((h * width, 2), dtype=np.int64)
        for i in range(k):
            grid[:, :] = 0
            for r in range(h):
                for c in range(max(lefts[i, r], 0), min(rights[i, r], width - 1) + 1):
                    grid[r, c] = 1
            out[i] = _validate_one(grid, stack)

    @njit(cache=True)
    def _count_disjoint_jit(a, b):
        total = 0
        for i in range(a.shape[0]):
            x = a[i]
            for j in range(b.shape[0]):
                if x & b[j] == 0:
                    total += 1
        return total

    def validate_rows_numba(lefts: np.ndarray, rights: np.ndarray, width: int) -> np.ndarray:
        lefts = np.ascontiguousarray(lefts, dtype=np.int64)
        rights = np.ascontiguousarray(rights, dtype=np.int64)
        out = np.zeros(lefts.shape[0], dtype=np.bool_)
        if lefts.shape[0]:
            _validate_rows_jit(lefts, rights, int(width), out)
        return out

    def count_disjoint_numba(masks_a: np.ndarray, masks_b: np.ndarray) -> int:
        a = np.ascontiguousarray(masks_a, dtype=np.uint64)
        b = np.ascontiguousarray(masks_b, dtype=np.uint64)
        return int(_count_disjoint_jit(a, b))

    validate_rows_numba.__doc__ = validate_rows_numpy.__doc__
    count_disjoint_numba.__doc__ = count_disjoint_numpy.__doc__

else:  # pragma: no cover
    validate_rows_numba = validate_rows_numpy
    count_disjoint_numba = count_disjoint_numpy


if HAVE_NUMBA and _numba_requested():
    backend = "numba"
    validate_rows = validate_rows_numba
    count_disjoint = count_disjoint_numba
else:
    backend = "numpy"
    validate_rows = validate_rows_numpy
    count_disjoint = count_disjoint_numpy
