import itertools

import pytest

from convexcount import lattice
from convexcount.errors import DecompositionError, FeasibilityError, HypothesisError
from convexcount.lattice import (
    Cell,
    CornerParams,
    LatticePath,
    Polyomino,
    Step,
    bounding_rect,
    canonical_key,
    count_convex_bruteforce,
    count_path_pairs_bruteforce,
    count_path_pairs_lgv,
    decompose,
    enumerate_convex,
    from_ascii,
    is_convex,
    is_polyomino,
    recompose,
    to_ascii,
)
from convexcount.sweeps import path_pair_tuples

L_TROMINO = Polyomino([(0, 0), (1, 0), (0, 1)])


def subset_oracle(m, n):
    """|P(m, n)| by testing every subset of the box against the definition."""
    box = [(c, r) for r in range(n + 1) for c in range(m + 1)]
    total = 0
    for bits in range(1, 1 << len(box)):
        cells = [box[i] for i in range(len(box)) if bits >> i & 1]
        if not is_polyomino(cells):
            continue
        p = Polyomino(cells)
        if is_convex(p) and bounding_rect(p) == (m + 1, n + 1):
            total += 1
    return total


def point_set_pairs(a, b, c, d, a2, b2, c2, d2):
    """Disjoint right/up path pairs, by explicit point sets."""

    def paths(x0, y0, x1, y1):
        if x1 < x0 or y1 < y0:
            return []
        out = []
        for moves in set(itertools.permutations("R" * (x1 - x0) + "U" * (y1 - y0))):
            x, y = x0, y0
            pts = {(x, y)}
            for mv in moves:
                x, y = (x + 1, y) if mv == "R" else (x, y + 1)
                pts.add((x, y))
            out.append(pts)
        return out

    return sum(1 for p in paths(a, b, c, d) for q in paths(a2, b2, c2, d2) if not p & q)


# -- geometry -------------------------------------------------------------


@pytest.mark.parametrize(
    "cells, expected",
    [([(0, 0)], True), ([(0, 0), (1, 1)], False), ([], False), ([(0, 0), (0, 1), (1, 1)], True)],
)
def test_is_polyomino(cells, expected):
    assert is_polyomino(cells) is expected


def test_polyomino_rejects_disconnected():
    with pytest.raises(DecompositionError):
        Polyomino([(0, 0), (2, 0)])


@pytest.mark.parametrize(
    "cells, expected",
    [
        ([(0, 0), (1, 0), (0, 1), (1, 1)], True),
        ([(0, 0), (1, 0), (0, 1)], True),
        ([(0, 0), (1, 0), (2, 0), (0, 1), (2, 1)], False),
        ([(0, 0), (0, 1), (0, 2), (1, 0), (1, 2)], False),
    ],
)
def test_is_convex(cells, expected):
    assert is_convex(Polyomino(cells)) is expected


@pytest.mark.parametrize(
    "cells, rect",
    [([(0, 0)], (1, 1)), ([(0, 0), (1, 0), (0, 1)], (2, 2)), ([(2, 3)], (1, 1)), ([(5, 1), (6, 1), (6, 2)], (2, 2))],
)
def test_bounding_rect(cells, rect):
    assert bounding_rect(Polyomino(cells)) == rect


def test_ascii_roundtrip():
    text = "#.\n##"
    p = from_ascii(text)
    assert p == L_TROMINO
    assert to_ascii(p) == text
    assert to_ascii(Polyomino([(3, 4)])) == "#"


def test_ascii_rejects_ragged():
    with pytest.raises(DecompositionError):
        from_ascii("##\n#")


# -- enumeration ----------------------------------------------------------


@pytest.mark.parametrize("m, n", [(0, 0), (1, 0), (0, 3), (1, 1), (1, 2), (2, 1), (1, 3), (2, 2), (1, 4), (2, 3), (3, 2)])
def test_bruteforce_matches_subset_oracle(m, n):
    assert count_convex_bruteforce(m, n) == subset_oracle(m, n)


def test_anchor_counts():
    assert count_convex_bruteforce(1, 1) == 5
    assert count_convex_bruteforce(1, 2) == 13
    assert count_convex_bruteforce(2, 2) == 68
    # Antidiagonal sums against perimeter counts 28 and 120.
    assert 1 + count_convex_bruteforce(1, 2) + count_convex_bruteforce(2, 1) + 1 == 28
    assert sum(count_convex_bruteforce(m, 4 - m) for m in range(5)) == 120


def test_p11_members():
    members = list(enumerate_convex(1, 1))
    assert len(members) == 5
    assert members[0] == Polyomino([(0, 0), (1, 0), (0, 1), (1, 1)])
    assert {len(p) for p in members[1:]} == {3}


@pytest.mark.parametrize("n", range(6))
def test_single_column(n):
    (only,) = enumerate_convex(0, n)
    assert only == Polyomino([(0, r) for r in range(n + 1)])


@pytest.mark.parametrize("m, n", [(m, n) for m in range(5) for n in range(5)])
def test_enumeration_invariants(m, n):
    members = list(enumerate_convex(m, n))
    assert len(set(members)) == len(members)
    assert len(members) == count_convex_bruteforce(m, n)
    for p in members:
        assert is_convex(p)
        assert bounding_rect(p) == (m + 1, n + 1)
        assert min(c.col for c in p.cells) == 0 and min(c.row for c in p.cells) == 0
        params, *paths = decompose(p)
        assert recompose(params, paths, m, n) == p
    assert count_convex_bruteforce(m, n) == count_convex_bruteforce(n, m)


@pytest.mark.parametrize("m, n", [(1, 1), (2, 2), (3, 1), (2, 3)])
def test_stream_is_in_canonical_order(m, n):
    members = list(enumerate_convex(m, n))
    assert members == sorted(members, key=canonical_key)


def test_canonical_key_is_prefix_after_order():
    full = Polyomino([(0, 0), (1, 0), (0, 1), (1, 1)])
    missing_corner = L_TROMINO
    assert canonical_key(full) < canonical_key(missing_corner)


def test_feasibility_bound(monkeypatch):
    monkeypatch.setenv("CONVEXCOUNT_MAX_BRUTE", "3")
    with pytest.raises(FeasibilityError):
        count_convex_bruteforce(2, 2)
    with pytest.raises(FeasibilityError):
        next(enumerate_convex(4, 0))
    assert count_convex_bruteforce(1, 2) == 13
    monkeypatch.delenv("CONVEXCOUNT_MAX_BRUTE")
    assert lattice.max_brute() == lattice.DEFAULT_MAX_BRUTE
    with pytest.raises(FeasibilityError):
        count_convex_bruteforce(7, 6)


# -- boundary paths -------------------------------------------------------


def test_lattice_path_step_classes():
    with pytest.raises(ValueError):
        LatticePath((0, 0), (Step.UP, Step.DOWN), "up")
    path = LatticePath((0, 2), (Step.RIGHT, Step.DOWN, Step.DOWN), "down")
    assert path.end == (1, 0)
    assert LatticePath((3, 3)).is_point


def test_decompose_full_rectangle():
    m, n = 3, 2
    rect = Polyomino([(c, r) for c in range(m + 1) for r in range(n + 1)])
    params, l1, l2, l3, l4 = decompose(rect)
    assert params == CornerParams(0, 0, 0, 0)
    assert l1.is_point and l2.is_point
    assert l3.points() == [(1, 0), (2, 0), (3, 0), (4, 0), (4, 1), (4, 2)]
    assert l4.points() == [(0, 1), (0, 2), (0, 3), (1, 3), (2, 3), (3, 3)]
    assert recompose(params, (l1, l2, l3, l4), m, n) == rect


def test_decompose_l_tromino():
    params, l1, l2, l3, l4 = decompose(L_TROMINO)
    assert (params.a1, params.b1) == (0, 0) and l1.is_point
    assert (params.a2, params.b2) == (1, 1)
    assert l2.points() == [(1, 2), (1, 1), (2, 1)]
    assert l3.points() == [(1, 0), (2, 0)]
    assert l4.points() == [(0, 1), (0, 2)]


def test_decompose_requires_convex_normalized():
    with pytest.raises(DecompositionError):
        decompose(Polyomino([(0, 0), (1, 0), (2, 0), (0, 1), (2, 1)]))
    with pytest.raises(DecompositionError):
        decompose(Polyomino([(1, 1), (2, 1)]))


def test_roundtrip_p12():
    members = list(enumerate_convex(1, 2))
    assert len(members) == 13
    for p in members:
        params, *paths = decompose(p)
        assert recompose(params, paths, 1, 2) == p


def test_decomposed_pairs_never_meet():
    for m in range(4):
        for n in range(4):
            for p in enumerate_convex(m, n):
                _, l1, l2, l3, l4 = decompose(p)
                assert not set(l1.points()) & set(l2.points())
                assert not set(l3.points()) & set(l4.points())


def test_recompose_rejects_intersecting_pair():
    # 3x3 box, both corners cut so deep that L1 and L2 share (1, 2).
    m = n = 2
    l1 = LatticePath.from_points([(0, 2), (1, 2), (1, 1), (1, 0)], "down")
    l2 = LatticePath.from_points([(1, 3), (1, 2), (2, 2), (3, 2)], "down")
    l3 = LatticePath.from_points([(2, 0), (3, 0), (3, 1)], "up")
    l4 = LatticePath.from_points([(0, 3)], "down")
    # The L4 endpoint for a2 = 2 is (0, 3); an intersecting L1/L2 is reported first.
    with pytest.raises(DecompositionError, match="intersect"):
        recompose(CornerParams(1, 2, 2, 1), (l1, l2, l3, l4), m, n)


def test_recompose_rejects_endpoint_mismatch():
    params, *paths = decompose(L_TROMINO)
    with pytest.raises(DecompositionError):
        recompose(CornerParams(0, 0, 1, 0), paths, 1, 1)


# -- path pairs -----------------------------------------------------------


@pytest.mark.parametrize(
    "coords, expected",
    [((0, 1, 2, 3, 1, 0, 3, 2), 20), ((0, 1, 1, 2, 1, 0, 2, 1), 3)],
)
def test_lgv_examples(coords, expected):
    assert point_set_pairs(*coords) == expected
    assert count_path_pairs_lgv(*coords) == expected
    assert count_path_pairs_bruteforce(*coords) == expected


def test_far_apart_paths_factor():
    # The second pair of paths lives far below-right, so the correction term vanishes.
    coords = (0, 5, 2, 7, 6, 0, 8, 2)
    assert count_path_pairs_lgv(*coords) == 6 * 6
    assert count_path_pairs_bruteforce(*coords) == 36


def test_lgv_rejects_hypothesis_violation():
    with pytest.raises(HypothesisError):
        count_path_pairs_lgv(1, 1, 2, 3, 0, 0, 3, 2)  # second start not to the right
    with pytest.raises(HypothesisError):
        count_path_pairs_lgv(0, 1, 1, 2, 1, 0, 2, 3)  # ends out of order


def test_determinant_fails_without_ordered_ends():
    # Satisfies the six start/length inequalities but the second path ends
    # above the first: the determinant is then not a count.
    coords = (0, 1, 1, 2, 1, 0, 2, 3)
    assert point_set_pairs(*coords) == 3
    assert lattice.lgv_determinant(*coords) == 2
    coords = (0, 1, 5, 2, 1, 0, 2, 5)
    assert count_path_pairs_bruteforce(*coords) == 0
    assert lattice.lgv_determinant(*coords) < 0


def test_lgv_exhaustive_small_grid():
    for t in path_pair_tuples(3):
        assert count_path_pairs_lgv(*t) == count_path_pairs_bruteforce(*t) == point_set_pairs(*t), t


def test_bruteforce_handles_missing_paths():
    assert count_path_pairs_bruteforce(0, 0, 2, 2, 3, 0, 1, 1) == 0


def test_path_feasibility_bound():
    with pytest.raises(FeasibilityError):
        count_path_pairs_bruteforce(0, 0, 7, 7, 1, 0, 8, 1)
