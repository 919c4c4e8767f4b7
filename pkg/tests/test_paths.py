"""
衝突のない経路のテスト
"""
import numpy as np
import pytest

from src.loading import Occupancy
from src.models.move_models import Site
from src.pipeline.paths import one_turn_path, shortest_clear_path, straight_clear


def test_straight_clear_hand_trace(hand_trace_board):
    assert straight_clear(hand_trace_board, Site(1, 3), Site(3, 3))


def test_straight_clear_destination_filled(hand_trace_board):
    assert not straight_clear(hand_trace_board, Site(1, 2), Site(2, 2))


def test_straight_clear_blocked_intermediate(board):
    occ = board(4, [(0, 0), (0, 2)])
    assert not straight_clear(occ, Site(0, 0), Site(0, 3))


def test_straight_clear_source_does_not_block(board):
    occ = board(3, [(2, 0)])
    assert straight_clear(occ, Site(2, 0), Site(0, 0))


@pytest.mark.parametrize(
    "source, dest", [(Site(1, 1), Site(1, 1)), (Site(0, 0), Site(1, 2))]
)
def test_straight_clear_rejects_invalid(board, source, dest):
    with pytest.raises(ValueError):
        straight_clear(board(3, []), source, dest)


def test_one_turn_prefers_row_first(board):
    path = one_turn_path(board(3, [(0, 0)]), Site(0, 0), Site(2, 2))
    assert path.waypoints == (
        Site(0, 0),
        Site(1, 0),
        Site(2, 0),
        Site(2, 1),
        Site(2, 2),
    )
    assert path.length == 4
    assert len(path.segments) == 2


def test_one_turn_falls_back_to_column_first(board):
    occ = board(3, [(0, 0), (1, 0)])
    path = one_turn_path(occ, Site(0, 0), Site(2, 2))
    assert path.waypoints[1] == Site(0, 1)
    assert path.waypoints[2] == Site(0, 2)
    assert path.dest == Site(2, 2)


def test_one_turn_collinear(board):
    path = one_turn_path(board(3, [(0, 0)]), Site(0, 0), Site(0, 2))
    assert path.length == 2
    assert len(path.segments) == 1


def test_one_turn_both_corners_blocked(board):
    occ = board(3, [(0, 0), (2, 0), (0, 2)])
    assert one_turn_path(occ, Site(0, 0), Site(2, 2)) is None


def test_shortest_path_detours_around_wall(board):
    """U字の迂回。同じ長さなら上、左、下、右の順で先に見つかる左回り"""
    occ = board(5, [(0, 2), (1, 1), (1, 2), (1, 3)])
    path = shortest_clear_path(occ, Site(0, 2), Site(2, 2))
    assert path.waypoints == (
        Site(0, 2),
        Site(0, 1),
        Site(0, 0),
        Site(1, 0),
        Site(2, 0),
        Site(2, 1),
        Site(2, 2),
    )
    assert path.length == 6


def test_shortest_path_unreachable(board):
    occ = board(3, [(0, 0), (0, 1), (1, 0), (1, 2), (2, 1)])
    assert shortest_clear_path(occ, Site(0, 0), Site(1, 1)) is None


def test_shortest_path_matches_one_turn_when_open(board):
    occ = board(6, [(5, 5)])
    path = shortest_clear_path(occ, Site(5, 5), Site(1, 2))
    assert path.length == Site(5, 5).manhattan(Site(1, 2))


def _exhaustive_shortest(filled, source, dest):
    """自己交差しない経路をすべて列挙した最短長（なければ None）"""
    height, width = filled.shape
    best = None
    visited = {source}

    def walk(site, length):
        nonlocal best
        if site == dest:
            best = length if best is None else min(best, length)
            return
        for dr, dc in ((-1, 0), (0, -1), (1, 0), (0, 1)):
            r, c = site.row + dr, site.col + dc
            if not (0 <= r < height and 0 <= c < width) or filled[r, c]:
                continue
            nxt = Site(r, c)
            if nxt in visited:
                continue
            visited.add(nxt)
            walk(nxt, length + 1)
            visited.remove(nxt)

    walk(source, 0)
    return best


@pytest.mark.parametrize("seed", range(60))
def test_shortest_path_is_optimal(seed):
    """5x5 以下のランダム盤面で全経路の列挙と長さが一致する"""
    rng = np.random.default_rng(seed)
    size = 3 + seed % 3
    filled = rng.random((size, size)) < 0.35
    sites = [Site(r, c) for r in range(size) for c in range(size)]
    source = sites[rng.integers(len(sites))]
    dest = sites[rng.integers(len(sites))]
    if source == dest:
        dest = Site(size - 1 - source.row, size - 1 - source.col)
    if source == dest:
        dest = Site(0, 0)
    filled[source.row, source.col] = True
    filled[dest.row, dest.col] = False

    path = shortest_clear_path(Occupancy(filled), source, dest)
    expected = _exhaustive_shortest(filled, source, dest)

    if expected is None:
        assert path is None
        return
    assert path.length == expected
    assert path.source == source and path.dest == dest
    assert not any(filled[s.row, s.col] for s in path.waypoints[1:])
