"""
後処理ステージ。

圧縮後に残ったターゲットの空きトラップを、内側のものから順に、ターゲット外で
最も近い原子を1つずつ単一ツイーザーで運んで埋める。
"""

from collections import deque
from typing import List, Optional, Tuple

import numpy as np

from ..lattice import layer_grid, target_mask
from ..loading.occupancy import Occupancy
from ..models.data_models import GridSpec
from ..models.move_models import FillMove, MoveLog, Path, Site
from ..utils import get_logger
from .error_handler import CollisionError
from .paths import one_turn_path, shortest_clear_path

logger = get_logger(__name__)

STAGE = "postprocess"

_NEIGHBORS = ((-1, 0), (0, -1), (1, 0), (0, 1))


def remaining_vacancies(occ: Occupancy, spec: GridSpec) -> List[Site]:
    """ターゲットの空きトラップをレイヤー番号、行、列の昇順で返す。"""
    empty = np.argwhere(~occ.filled & target_mask(spec))
    if len(empty) == 0:
        return []
    layers = layer_grid(spec)[empty[:, 0], empty[:, 1]]
    order = np.lexsort((empty[:, 1], empty[:, 0], layers))
    return [Site(int(r), int(c)) for r, c in empty[order]]


def _reservoir_candidates(occ: Occupancy, spec: GridSpec, vacancy: Site) -> np.ndarray:
    """ターゲット外の原子をマンハッタン距離、行、列の昇順に並べる。"""
    atoms = np.argwhere(occ.filled & ~target_mask(spec))
    if len(atoms) == 0:
        return atoms
    dist = np.abs(atoms[:, 0] - vacancy.row) + np.abs(atoms[:, 1] - vacancy.col)
    return atoms[np.lexsort((atoms[:, 1], atoms[:, 0], dist))]


def _nearest_by_search(
    occ: Occupancy, spec: GridSpec, vacancy: Site
) -> Optional[Site]:
    """
    空きトラップから空きサイトを幅優先で広げ、最短の迂回経路で届く
    リザーバー原子を探す（同じ距離なら行、列の小さいもの）。
    """
    grid = occ.filled.tolist()
    size = occ.height
    lo, hi = spec.offset, spec.offset + spec.L
    seen = {vacancy}
    frontier = deque([vacancy])

    while frontier:
        found = []
        for _ in range(len(frontier)):
            current = frontier.popleft()
            for dr, dc in _NEIGHBORS:
                r, c = current.row + dr, current.col + dc
                if not (0 <= r < size and 0 <= c < size):
                    continue
                site = Site(r, c)
                if site in seen:
                    continue
                seen.add(site)
                if grid[r][c]:
                    if not (lo <= r < hi and lo <= c < hi):
                        found.append(site)
                    continue
                frontier.append(site)
        if found:
            return min(found)
    return None


def select_source(
    occ: Occupancy, spec: GridSpec, vacancy: Site
) -> Optional[Tuple[Site, Path]]:
    """
    空きトラップを埋める原子と経路を選ぶ。

    まずマンハッタン距離の近い順に1回曲がりの経路を試し、どの原子も1回曲がりで
    届かなければ幅優先探索で最短経路の原子を選ぶ。

    Returns:
        (原子のサイト, 経路)、届く原子がなければ None
    """
    for r, c in _reservoir_candidates(occ, spec, vacancy):
        source = Site(int(r), int(c))
        path = one_turn_path(occ, source, vacancy)
        if path is not None:
            return source, path

    source = _nearest_by_search(occ, spec, vacancy)
    if source is None:
        return None
    path = shortest_clear_path(occ, source, vacancy)
    if path is None:
        raise CollisionError(f"{source} から {vacancy} への経路が再構成できません")
    return source, path


def execute_fill(occ: Occupancy, log: MoveLog, move: FillMove) -> None:
    """1回の移動を占有状態と MoveLog に反映する。"""
    op_id = log.new_op()
    log.capture(STAGE, op_id, [move.source])
    for segment in move.path.segments:
        log.travel(STAGE, op_id, segment.steps, segment.direction)
    log.release(STAGE, op_id, [move.dest])
    occ.set(move.source, False)
    occ.set(move.dest, True)


def run_postprocess(
    occ: Occupancy, spec: GridSpec
) -> Tuple[Occupancy, MoveLog, List[Site]]:
    """
    後処理ステージ全体を実行する。

    Args:
        occ: 圧縮ステージ後の占有状態（変更されない）
        spec: グリッド定義

    Returns:
        (最終占有状態, 後処理の MoveLog, 埋められなかった空きトラップ)
    """
    state = occ.copy()
    log = MoveLog()
    unfilled: List[Site] = []

    for vacancy in remaining_vacancies(state, spec):
        choice = select_source(state, spec, vacancy)
        if choice is None:
            unfilled.append(vacancy)
            continue
        source, path = choice
        execute_fill(state, log, FillMove(source, vacancy, path))

    if unfilled:
        logger.debug(f"{len(unfilled)} 個の空きトラップに届く原子がありません")
    return state, log, unfilled
