"""
衝突のない経路の判定と探索。

経路上の中間サイトと終点はすべて空でなければならない（移動する原子自身の
元サイトは障害物に数えない）。
"""

from collections import deque
from typing import List, Optional

import numpy as np

from ..loading.occupancy import Occupancy
from ..models.move_models import Path, Site

# BFS の近傍順: 上、左、下、右
_NEIGHBORS = ((-1, 0), (0, -1), (1, 0), (0, 1))


def _walk(a: Site, b: Site) -> List[Site]:
    """a から b への直線上のサイト（a を除き b を含む）。"""
    if a.row == b.row:
        step = 1 if b.col > a.col else -1
        return [Site(a.row, c) for c in range(a.col + step, b.col + step, step)]
    step = 1 if b.row > a.row else -1
    return [Site(r, a.col) for r in range(a.row + step, b.row + step, step)]


def _line_cells(filled: np.ndarray, a: Site, b: Site) -> np.ndarray:
    """a を除き b を含む直線区間のセル値。"""
    if a.row == b.row:
        if b.col > a.col:
            return filled[a.row, a.col + 1 : b.col + 1]
        return filled[a.row, b.col : a.col]
    if b.row > a.row:
        return filled[a.row + 1 : b.row + 1, a.col]
    return filled[b.row : a.row, a.col]


def straight_clear(occ: Occupancy, source: Site, dest: Site) -> bool:
    """
    同じ行または列にある2点間の直線経路が空いているか判定する。

    Raises:
        ValueError: source == dest、または同一直線上にない場合
    """
    if source == dest:
        raise ValueError(f"始点と終点が同じです: {source}")
    if source.row != dest.row and source.col != dest.col:
        raise ValueError(f"{source} と {dest} は同じ行・列にありません")
    return not _line_cells(occ.filled, source, dest).any()


def one_turn_path(occ: Occupancy, source: Site, dest: Site) -> Optional[Path]:
    """
    1回曲がりの経路を探す。行方向を先に動く順序（角 = (dest.row, source.col)）を
    優先し、次に列方向を先に動く順序を試す。同一直線上なら直線経路を返す。

    Returns:
        空いている経路、どちらの順序も塞がれていれば None
    """
    if source.row == dest.row or source.col == dest.col:
        if straight_clear(occ, source, dest):
            return Path((source, *_walk(source, dest)))
        return None

    for corner in (Site(dest.row, source.col), Site(source.row, dest.col)):
        if _line_cells(occ.filled, source, corner).any():
            continue
        if _line_cells(occ.filled, corner, dest).any():
            continue
        return Path((source, *_walk(source, corner), *_walk(corner, dest)))
    return None


def shortest_clear_path(occ: Occupancy, source: Site, dest: Site) -> Optional[Path]:
    """
    空いているサイトのみを通る最短経路を幅優先探索で求める。

    近傍は上、左、下、右の順に展開するため、同じ長さの経路の中での選択は決定的。

    Returns:
        最短経路、到達できなければ None
    """
    grid = occ.filled.tolist()
    height, width = occ.height, occ.width
    parents = {source: None}
    queue = deque([source])

    while queue:
        current = queue.popleft()
        if current == dest:
            waypoints = []
            node: Optional[Site] = current
            while node is not None:
                waypoints.append(node)
                node = parents[node]
            return Path(tuple(reversed(waypoints)))

        for dr, dc in _NEIGHBORS:
            r, c = current.row + dr, current.col + dc
            if not (0 <= r < height and 0 <= c < width) or grid[r][c]:
                continue
            nxt = Site(r, c)
            if nxt not in parents:
                parents[nxt] = current
                queue.append(nxt)
    return None
