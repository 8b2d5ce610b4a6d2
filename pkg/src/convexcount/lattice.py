"""Polyomino geometry, brute-force enumeration and boundary lattice paths.

Coordinates: a cell ``(col, row)`` is the unit square ``[col, col+1] x
[row, row+1]``; rows grow upward.  Lattice paths live on the vertex lattice,
so the ``(m+1) x (n+1)`` box of ``P(m, n)`` spans ``[0, m+1] x [0, n+1]``.

A convex polyomino in ``P(m, n)`` is cut from its box by two corner
staircases, described by four boundary paths:

* ``L1``  ``(0, b1)      -> (a1, 0)``         right/down, lower-left corner
* ``L2``  ``(m+1-a2, n+1) -> (m+1, n+1-b2)``   right/down, upper-right corner
* ``L3``  ``(a1+1, 0)    -> (m+1, n-b2)``      right/up,   lower-right side
* ``L4``  ``(0, b1+1)    -> (m-a2, n+1)``      right/up,   upper-left side

The lower boundary of the polyomino is ``L1, R, L3, U`` and the upper one is
``U, L4, R, L2``.
"""
from __future__ import annotations

import enum
import itertools
import os
from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, NamedTuple, Sequence

import numpy as np

from . import _kernels
from .errors import DecompositionError, FeasibilityError, HypothesisError
from .exactnum import binomial

__all__ = [
    "Cell",
    "Polyomino",
    "Step",
    "LatticePath",
    "CornerParams",
    "is_polyomino",
    "is_convex",
    "bounding_rect",
    "canonical_key",
    "enumerate_convex",
    "count_convex_bruteforce",
    "decompose",
    "recompose",
    "count_path_pairs_lgv",
    "lgv_determinant",
    "count_path_pairs_bruteforce",
    "determinant_applies",
    "to_ascii",
    "from_ascii",
    "max_brute",
    "DEFAULT_MAX_BRUTE",
    "DEFAULT_MAX_PATH_STEPS",
]

DEFAULT_MAX_BRUTE = 12
DEFAULT_MAX_PATH_STEPS = 12
_BATCH = 4096


def max_brute() -> int:
    """Largest ``m + n`` accepted by the polyomino brute force.

    Read from ``CONVEXCOUNT_MAX_BRUTE`` when set.
    """
    raw = os.environ.get("CONVEXCOUNT_MAX_BRUTE")
    if raw is None or raw.strip() == "":
        return DEFAULT_MAX_BRUTE
    try:
        return int(raw)
    except ValueError:
        raise FeasibilityError(f"CONVEXCOUNT_MAX_BRUTE must be an integer, got {raw!r}") from None


class Cell(NamedTuple):
    col: int
    row: int


def _row_major(cells: Iterable[Cell]) -> list[Cell]:
    return sorted(cells, key=lambda c: (c.row, c.col))


def is_polyomino(cells: Iterable[tuple[int, int]]) -> bool:
    """True iff ``cells`` is non-empty and edge-connected."""
    cellset = {Cell(*c) for c in cells}
    if not cellset:
        return False
    start = next(iter(cellset))
    seen = {start}
    queue = deque([start])
    while queue:
        col, row = queue.popleft()
        for nb in ((col + 1, row), (col - 1, row), (col, row + 1), (col, row - 1)):
            if nb in cellset and nb not in seen:
                seen.add(Cell(*nb))
                queue.append(Cell(*nb))
    return len(seen) == len(cellset)


@dataclass(frozen=True)
class Polyomino:
    """A finite edge-connected set of cells."""

    cells: frozenset

    def __init__(self, cells: Iterable[tuple[int, int]]):
        cellset = frozenset(Cell(*c) for c in cells)
        if any(c.col < 0 or c.row < 0 for c in cellset):
            raise DecompositionError("cell coordinates must be non-negative")
        if not is_polyomino(cellset):
            raise DecompositionError("cells are empty or not edge-connected")
        object.__setattr__(self, "cells", cellset)

    @classmethod
    def _trusted(cls, cells: frozenset) -> "Polyomino":
        # Skips validation; only for cells already checked by the kernels.
        obj = object.__new__(cls)
        object.__setattr__(obj, "cells", cells)
        return obj

    def sorted_cells(self) -> list[Cell]:
        """Cells in row-major order (bottom row first, left to right)."""
        return _row_major(self.cells)

    def normalized(self) -> "Polyomino":
        c0 = min(c.col for c in self.cells)
        r0 = min(c.row for c in self.cells)
        if c0 == 0 and r0 == 0:
            return self
        return Polyomino._trusted(frozenset(Cell(c.col - c0, c.row - r0) for c in self.cells))

    def __len__(self) -> int:
        return len(self.cells)

    def __repr__(self) -> str:
        return f"Polyomino({[tuple(c) for c in self.sorted_cells()]})"


def bounding_rect(p: Polyomino) -> tuple[int, int]:
    """``(width, height)`` of the smallest box containing ``p``."""
    cols = [c.col for c in p.cells]
    rows = [c.row for c in p.cells]
    return max(cols) - min(cols) + 1, max(rows) - min(rows) + 1


def _is_interval(values: Iterable[int]) -> bool:
    vals = sorted(values)
    return vals[-1] - vals[0] + 1 == len(vals)


def is_convex(p: Polyomino) -> bool:
    """True iff every row and every column of ``p`` is a single segment."""
    by_row: dict[int, list[int]] = {}
    by_col: dict[int, list[int]] = {}
    for col, row in p.cells:
        by_row.setdefault(row, []).append(col)
        by_col.setdefault(col, []).append(row)
    return all(map(_is_interval, by_row.values())) and all(map(_is_interval, by_col.values()))


def canonical_key(p: Polyomino) -> tuple[int, ...]:
    """Sort key giving the canonical enumeration order.

    Polyominoes with the same box compare by their row-major occupancy
    pattern, occupied before empty.  Equivalently: lexicographic on the
    row-major cell lists, where a list that is a proper prefix of another
    sorts after it.  The full box therefore comes first.
    """
    q = p.normalized()
    width, height = bounding_rect(q)
    cells = q.cells
    return (width, height) + tuple(
        0 if Cell(c, r) in cells else 1 for r in range(height) for c in range(width)
    )


# --------------------------------------------------------------------------
# ASCII format


def to_ascii(p: Polyomino) -> str:
    """Render ``p`` one row per line, top row first, ``#`` occupied."""
    q = p.normalized()
    width, height = bounding_rect(q)
    lines = []
    for r in reversed(range(height)):
        lines.append("".join("#" if Cell(c, r) in q.cells else "." for c in range(width)))
    return "\n".join(lines)


def from_ascii(text: str) -> Polyomino:
    """Inverse of :func:`to_ascii`."""
    lines = [ln for ln in text.strip("\n").split("\n")]
    if not lines or any(len(ln) != len(lines[0]) for ln in lines):
        raise DecompositionError("ASCII rows must all have the same length")
    height = len(lines)
    cells = []
    for i, ln in enumerate(lines):
        for c, ch in enumerate(ln):
            if ch == "#":
                cells.append((c, height - 1 - i))
            elif ch != ".":
                raise DecompositionError(f"unexpected character {ch!r}")
    return Polyomino(cells).normalized()


# --------------------------------------------------------------------------
# Enumeration


def _row_candidates(m: int, n: int) -> Iterator[tuple[tuple[int, ...], tuple[int, ...]]]:
    """Row-interval sequences, bottom row first, in canonical order.

    Pruning keeps consecutive rows overlapping, left ends valley-shaped and
    right ends peak-shaped, and drops prefixes that can no longer touch the
    left or right side of the box.  Survivors are still validated by the
    kernel, so pruning can only lose candidates, never admit bad ones.
    """
    width = m + 1
    height = n + 1
    intervals = [(lo, hi) for lo in range(width) for hi in range(width - 1, lo - 1, -1)]
    lefts = [0] * height
    rights = [0] * height

    def extend(row, min_left, max_right, rising, falling):
        if row == height:
            if min_left == 0 and max_right == m:
                yield tuple(lefts), tuple(rights)
            return
        pl = lefts[row - 1]
        pr = rights[row - 1]
        for lo, hi in intervals:
            if lo > pr or hi < pl:
                continue
            if rising and lo < pl:
                continue
            if falling and hi > pr:
                continue
            now_rising = rising or lo > pl
            now_falling = falling or hi < pr
            ml = min(min_left, lo)
            mr = max(max_right, hi)
            if now_rising and ml > 0:
                continue
            if now_falling and mr < m:
                continue
            lefts[row] = lo
            rights[row] = hi
            yield from extend(row + 1, ml, mr, now_rising, now_falling)

    for lo, hi in intervals:
        lefts[0] = lo
        rights[0] = hi
        yield from extend(1, lo, hi, False, False)


def _check_feasible(m: int, n: int) -> None:
    if m < 0 or n < 0:
        raise ValueError(f"m and n must be non-negative, got ({m}, {n})")
    bound = max_brute()
    if m + n > bound:
        raise FeasibilityError(f"m + n = {m + n} exceeds the brute-force bound {bound}")


def _validated_batches(m: int, n: int, validate=None):
    validate = validate or _kernels.validate_rows
    stream = _row_candidates(m, n)
    while True:
        chunk = list(itertools.islice(stream, _BATCH))
        if not chunk:
            return
        lefts = np.array([c[0] for c in chunk], dtype=np.int64)
        rights = np.array([c[1] for c in chunk], dtype=np.int64)
        ok = validate(lefts, rights, m + 1)
        yield chunk, ok


def enumerate_convex(m: int, n: int) -> Iterator[Polyomino]:
    """Yield every element of ``P(m, n)`` once, normalized, in canonical order.

    Raises
    ------
    FeasibilityError
        If ``m + n`` exceeds :func:`max_brute`.
    """
    _check_feasible(m, n)
    for chunk, ok in _validated_batches(m, n):
        for (lefts, rights), good in zip(chunk, ok):
            if good:
                yield Polyomino._trusted(
                    frozenset(
                        Cell(c, r)
                        for r, (lo, hi) in enumerate(zip(lefts, rights))
                        for c in range(lo, hi + 1)
                    )
                )


def count_convex_bruteforce(m: int, n: int, validate=None) -> int:
    """``|P(m, n)|`` by exhaustive enumeration.

    ``validate`` overrides the kernel (used to compare numba and numpy).
    """
    _check_feasible(m, n)
    return sum(int(ok.sum()) for _, ok in _validated_batches(m, n, validate))


# --------------------------------------------------------------------------
# Boundary paths


class Step(enum.Enum):
    RIGHT = (1, 0)
    UP = (0, 1)
    DOWN = (0, -1)


_UP_CLASS = frozenset({Step.RIGHT, Step.UP})
_DOWN_CLASS = frozenset({Step.RIGHT, Step.DOWN})


@dataclass(frozen=True)
class LatticePath:
    """A start point and a homogeneous step sequence.

    ``direction`` is ``"up"`` for right/up paths and ``"down"`` for
    right/down paths.  Point paths carry ``"down"`` by convention.
    """

    start: tuple[int, int]
    steps: tuple[Step, ...] = ()
    direction: str = "down"

    def __post_init__(self):
        object.__setattr__(self, "start", (int(self.start[0]), int(self.start[1])))
        object.__setattr__(self, "steps", tuple(self.steps))
        if self.direction not in ("up", "down"):
            raise ValueError(f"direction must be 'up' or 'down', got {self.direction!r}")
        allowed = _UP_CLASS if self.direction == "up" else _DOWN_CLASS
        if not set(self.steps) <= allowed:
            raise ValueError(f"steps {self.steps} not in the {self.direction} step set")

    @classmethod
    def from_points(cls, points: Sequence[tuple[int, int]], direction: str) -> "LatticePath":
        steps = [Step((x1 - x0, y1 - y0)) for (x0, y0), (x1, y1) in zip(points, points[1:])]
        if not steps:
            direction = "down"
        return cls(tuple(points[0]), tuple(steps), direction)

    @property
    def is_point(self) -> bool:
        return not self.steps

    def points(self) -> list[tuple[int, int]]:
        x, y = self.start
        pts = [(x, y)]
        for s in self.steps:
            dx, dy = s.value
            x += dx
            y += dy
            pts.append((x, y))
        return pts

    @property
    def end(self) -> tuple[int, int]:
        return self.points()[-1]


@dataclass(frozen=True)
class CornerParams:
    a1: int
    b1: int
    a2: int
    b2: int

    def as_tuple(self) -> tuple[int, int, int, int]:
        return self.a1, self.b1, self.a2, self.b2


def _column_profile(p: Polyomino) -> tuple[int, int, list[int], list[int]]:
    if p.normalized() is not p:
        raise DecompositionError("polyomino must be normalized (min column = min row = 0)")
    if not is_convex(p):
        raise DecompositionError("polyomino is not convex")
    width, height = bounding_rect(p)
    lo = [height] * width
    hi = [-1] * width
    for col, row in p.cells:
        lo[col] = min(lo[col], row)
        hi[col] = max(hi[col], row)
    return width - 1, height - 1, lo, hi


def decompose(p: Polyomino) -> tuple[CornerParams, LatticePath, LatticePath, LatticePath, LatticePath]:
    """Split a normalized convex polyomino into its four boundary paths.

    Returns ``(params, L1, L2, L3, L4)``; see the module docstring.
    """
    m, n, lo, hi = _column_profile(p)
    b1 = lo[0]
    a1 = lo.index(0)
    top = [c for c in range(m + 1) if hi[c] == n]
    a2 = m - top[-1]
    b2 = n - hi[m]

    # Lower boundary from (0, b1) to (m+1, hi[m]+1).
    lower = [(0, b1)]
    for c in range(m + 1):
        lower.append((c + 1, lo[c]))
        nxt = lo[c + 1] if c < m else hi[m] + 1
        y = lo[c]
        step = 1 if nxt > y else -1
        while y != nxt:
            y += step
            lower.append((c + 1, y))
    # Upper boundary from (0, b1) to (m+1, hi[m]+1).
    upper = [(0, y) for y in range(b1, hi[0] + 2)]
    for c in range(m + 1):
        y = hi[c] + 1
        upper.append((c + 1, y))
        if c < m:
            nxt = hi[c + 1] + 1
            step = 1 if nxt > y else -1
            while y != nxt:
                y += step
                upper.append((c + 1, y))

    i1 = lower.index((a1, 0))
    l1 = LatticePath.from_points(lower[: i1 + 1], "down")
    l3 = LatticePath.from_points(lower[i1 + 1 : -1], "up")
    i4 = upper.index((m - a2, n + 1))
    l4 = LatticePath.from_points(upper[1 : i4 + 1], "up")
    l2 = LatticePath.from_points(upper[i4 + 1 :], "down")
    return CornerParams(a1, b1, a2, b2), l1, l2, l3, l4


def _expect_endpoints(name: str, path: LatticePath, start, end, direction: str) -> None:
    if path.start != start or path.end != end:
        raise DecompositionError(
            f"{name} must run {start} -> {end}, got {path.start} -> {path.end}"
        )
    if not path.is_point and path.direction != direction:
        raise DecompositionError(f"{name} must use the {direction} step set")


def recompose(
    params: CornerParams,
    paths: Sequence[LatticePath],
    m: int,
    n: int,
) -> Polyomino:
    """Rebuild the polyomino of ``P(m, n)`` bounded by ``paths = (L1, L2, L3, L4)``.

    Raises
    ------
    DecompositionError
        On endpoint mismatch, an intersecting pair, or boundaries that do not
        enclose a convex polyomino filling the box.
    """
    a1, b1, a2, b2 = params.as_tuple()
    if not (0 <= a1 <= m and 0 <= a2 <= m and 0 <= b1 <= n and 0 <= b2 <= n):
        raise DecompositionError(f"corner parameters {params} out of range for ({m}, {n})")
    l1, l2, l3, l4 = paths
    _expect_endpoints("L1", l1, (0, b1), (a1, 0), "down")
    _expect_endpoints("L2", l2, (m + 1 - a2, n + 1), (m + 1, n + 1 - b2), "down")
    _expect_endpoints("L3", l3, (a1 + 1, 0), (m + 1, n - b2), "up")
    _expect_endpoints("L4", l4, (0, b1 + 1), (m - a2, n + 1), "up")
    if set(l1.points()) & set(l2.points()):
        raise DecompositionError("L1 and L2 intersect")
    if set(l3.points()) & set(l4.points()):
        raise DecompositionError("L3 and L4 intersect")

    lower = l1.points() + l3.points() + [(m + 1, n + 1 - b2)]
    upper = [(0, b1)] + l4.points() + l2.points()
    floor = _horizontal_levels(lower, m)
    ceil = _horizontal_levels(upper, m)
    cells = []
    for c in range(m + 1):
        if ceil[c] <= floor[c]:
            raise DecompositionError(f"boundaries cross at column {c}")
        cells.extend((c, r) for r in range(floor[c], ceil[c]))
    try:
        p = Polyomino(cells)
    except DecompositionError:
        raise DecompositionError("boundaries do not enclose a connected region") from None
    if not is_convex(p) or bounding_rect(p) != (m + 1, n + 1):
        raise DecompositionError("boundaries do not enclose a convex polyomino filling the box")
    if decompose(p) != (params, l1, l2, l3, l4):
        raise DecompositionError("paths are not the boundary of the enclosed polyomino")
    return p


def _horizontal_levels(points: list[tuple[int, int]], m: int) -> list[int]:
    # Height of the unique horizontal step over each column of an x-monotone path.
    levels: list[int | None] = [None] * (m + 1)
    for (x0, y0), (x1, y1) in zip(points, points[1:]):
        if y0 == y1:
            if x1 != x0 + 1 or not 0 <= x0 <= m or levels[x0] is not None:
                raise DecompositionError("boundary is not x-monotone over the box")
            levels[x0] = y0
        elif x0 != x1 or abs(y1 - y0) != 1:
            raise DecompositionError("boundary has a non-unit step")
    if any(v is None for v in levels):
        raise DecompositionError("boundary does not span every column")
    return levels  # type: ignore[return-value]


# --------------------------------------------------------------------------
# Pairs of non-intersecting paths


def determinant_applies(a, b, c, d, a2, b2, c2, d2, ordered_ends: bool = True) -> bool:
    """Whether the tail-switching determinant applies.

    The six strict inequalities put the second start strictly below-right of
    the first and make both paths non-trivial.  ``ordered_ends`` adds
    ``c2 >= c`` and ``d >= d2`` (second end weakly below-right of the first),
    without which the determinant is not a count.
    """
    six = a2 > a and b > b2 and c > a and d > b and c2 > a2 and d2 > b2
    if not ordered_ends:
        return six
    return six and c2 >= c and d >= d2


def count_path_pairs_lgv(a: int, b: int, c: int, d: int, a2: int, b2: int, c2: int, d2: int) -> int:
    """Non-intersecting right/up path pairs ``(a,b)->(c,d)``, ``(a2,b2)->(c2,d2)``.

    Evaluates the 2x2 tail-switching determinant of single-path counts.

    Raises
    ------
    HypothesisError
        If the start or end points are not suitably ordered, see
        :func:`determinant_applies`.
    """
    if not determinant_applies(a, b, c, d, a2, b2, c2, d2):
        raise HypothesisError(
            f"determinant formula does not apply to {(a, b, c, d, a2, b2, c2, d2)}"
        )
    return lgv_determinant(a, b, c, d, a2, b2, c2, d2)


def lgv_determinant(a: int, b: int, c: int, d: int, a2: int, b2: int, c2: int, d2: int) -> int:
    """The 2x2 determinant of single-path counts, without any hypothesis check."""
    return (
        binomial(c - a + d - b, c - a) * binomial(c2 - a2 + d2 - b2, c2 - a2)
        - binomial(c - a2 + d - b2, c - a2) * binomial(c2 - a + d2 - b, c2 - a)
    )


@lru_cache(maxsize=4096)
def _paths_points(dx: int, dy: int) -> tuple[tuple[tuple[int, int], ...], ...]:
    # All right/up paths from the origin to (dx, dy) as point tuples.
    if dx < 0 or dy < 0:
        return ()
    out = []
    for rights in itertools.combinations(range(dx + dy), dx):
        x = y = 0
        pts = [(0, 0)]
        rset = set(rights)
        for i in range(dx + dy):
            if i in rset:
                x += 1
            else:
                y += 1
            pts.append((x, y))
        out.append(tuple(pts))
    return tuple(out)


def _masks(start, end, box) -> np.ndarray:
    x0, y0, x1, y1 = box
    h = y1 - y0 + 1
    out = []
    for pts in _paths_points(end[0] - start[0], end[1] - start[1]):
        mask = 0
        for px, py in pts:
            x = px + start[0]
            y = py + start[1]
            if x0 <= x <= x1 and y0 <= y <= y1:
                mask |= 1 << ((x - x0) * h + (y - y0))
        out.append(mask)
    return np.array(out, dtype=np.uint64)


def count_path_pairs_bruteforce(
    a: int, b: int, c: int, d: int, a2: int, b2: int, c2: int, d2: int,
    max_steps: int = DEFAULT_MAX_PATH_STEPS,
    count=None,
) -> int:
    """Exhaustive count of right/up path pairs sharing no lattice point.

    Each path is limited to ``max_steps`` steps.  Only points inside the
    overlap of the two paths' boxes can collide, so that overlap is what the
    64-bit point masks cover.
    """
    for dx, dy in ((c - a, d - b), (c2 - a2, d2 - b2)):
        if dx + dy > max_steps:
            raise FeasibilityError(f"path of {dx + dy} steps exceeds the bound {max_steps}")
    n1 = len(_paths_points(c - a, d - b))
    n2 = len(_paths_points(c2 - a2, d2 - b2))
    if n1 == 0 or n2 == 0:
        return 0
    box = (max(a, a2), max(b, b2), min(c, c2), min(d, d2))
    if box[0] > box[2] or box[1] > box[3]:
        return n1 * n2
    if (box[2] - box[0] + 1) * (box[3] - box[1] + 1) > 64:
        raise FeasibilityError("path overlap region does not fit a 64-bit mask")
    count = count or _kernels.count_disjoint
    return count(_masks((a, b), (c, d), box), _masks((a2, b2), (c2, d2), box))
