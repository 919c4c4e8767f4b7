"""
並列圧縮ステージ。

レイヤー1から外側へ順に、各レイヤーの4辺を反時計回り (top, left, bottom, right)
に1辺ずつ処理する。辺上の原子のうち、内側へまっすぐ進んで空のターゲットトラップ
に届くものを可動原子とし、1次元のモバイルツイーザー列（シャトルバス）で並列に
運ぶ。1回の転送では捕獲1回、解放は経路長の種類数、移動距離は最大経路長になる。

原子を置けるのは、対角線上のサイトか、中心側の隣 (inward_steps) が既に埋まって
いるサイトだけ。対角線で区切られた各直線は中心側から詰まり、残った空きは
どれもグリッド端まで空いた直線の上にある。
"""

from typing import List, Sequence, Tuple

import numpy as np

from ..lattice import inward_steps, layer_bounds, max_layer, ring_sides, target_mask
from ..loading.occupancy import Occupancy
from ..models.data_models import GridSpec, Parallelism, Protocol
from ..models.move_models import Assignment, MoveLog, Side, Site, TransferOp
from ..utils import get_logger
from .error_handler import CollisionError
from .paths import straight_clear

logger = get_logger(__name__)

STAGE = "compression"


def _side_lines(
    spec: GridSpec, k: int, side: Side, sites: Sequence[Site]
) -> Tuple[List[Site], np.ndarray, np.ndarray]:
    """
    辺上で内側領域を横切る直線を持つサイトと、その直線のセル座標を返す。

    Returns:
        (ソース候補, 行インデックス配列, 列インデックス配列)。配列は
        shape (候補数, 深さ) で、内側に向かう順に並ぶ。
    """
    lo, hi = layer_bounds(k, spec)
    size = spec.Lprime
    inward = side.inward

    # 角のサイトは内側領域を横切らない
    if side in (Side.TOP, Side.BOTTOM):
        sources = [s for s in sites if lo < s.col < hi]
    else:
        sources = [s for s in sites if lo < s.row < hi]

    step = inward[0] + inward[1]
    if step > 0:
        depth_coords = [x for x in range(lo + 1, hi) if 0 <= x < size]
    else:
        depth_coords = [x for x in range(hi - 1, lo, -1) if 0 <= x < size]

    if not sources or not depth_coords:
        empty = np.empty((0, 0), dtype=np.intp)
        return [], empty, empty

    depth = np.array(depth_coords, dtype=np.intp)
    if side in (Side.TOP, Side.BOTTOM):
        cols = np.array([s.col for s in sources], dtype=np.intp)
        rows_idx = np.broadcast_to(depth[None, :], (len(sources), len(depth)))
        cols_idx = np.broadcast_to(cols[:, None], (len(sources), len(depth)))
    else:
        rows = np.array([s.row for s in sources], dtype=np.intp)
        rows_idx = np.broadcast_to(rows[:, None], (len(sources), len(depth)))
        cols_idx = np.broadcast_to(depth[None, :], (len(sources), len(depth)))
    return sources, rows_idx, cols_idx


def landing_mask(occ: Occupancy, spec: GridSpec) -> np.ndarray:
    """
    原子を置ける空のターゲットトラップ。

    対角線上のサイトはいつでも置ける。それ以外は中心側の隣が埋まっている
    ときだけ置ける。
    """
    drow, dcol = inward_steps(spec)
    rows, cols = np.indices(occ.filled.shape)
    supported = occ.filled[rows + drow, cols + dcol]
    diagonal = (drow == 0) & (dcol == 0)
    return target_mask(spec) & ~occ.filled & (diagonal | supported)


def find_movable(
    occ: Occupancy, spec: GridSpec, k: int, side: Side
) -> List[Assignment]:
    """
    辺上の可動原子と行き先を求める。

    各原子から内側へ、最初の充填トラップか内側領域の反対端まで走査し、その
    空き区間で landing_mask が許す最も深いトラップを行き先とする。ターゲット上の
    原子も候補になる。

    Args:
        occ: 直前までの転送を反映した占有状態
        spec: グリッド定義
        k: ソースレイヤー (>= 1)
        side: 処理する辺

    Returns:
        辺に沿った順の Assignment のリスト（可動原子がなければ空）
    """
    if k < 1:
        raise ValueError(f"ソースレイヤーは k >= 1 が必要です: {k}")

    ring = ring_sides(k, spec)
    candidates = [s for s in ring.side(side) if occ.is_filled(s)]
    sources, rows_idx, cols_idx = _side_lines(spec, k, side, candidates)
    if not sources:
        return []

    blocked = occ.filled[rows_idx, cols_idx]
    landable = landing_mask(occ, spec)[rows_idx, cols_idx]
    depth = blocked.shape[1]
    positions = np.arange(depth)

    # 空き区間の長さ（最初の充填トラップの位置、なければ深さ全体）
    clear_len = np.where(blocked.any(axis=1), blocked.argmax(axis=1), depth)
    reachable = landable & (positions[None, :] < clear_len[:, None])
    deepest = np.where(reachable, positions[None, :], -1).max(axis=1)

    assignments = []
    for i in np.flatnonzero(deepest >= 0):
        j = int(deepest[i])
        dest = Site(int(rows_idx[i, j]), int(cols_idx[i, j]))
        assignments.append(Assignment(sources[i], dest))
    return assignments


def plan_side(
    assignments: Sequence[Assignment],
    protocol: Protocol,
    k: int = 0,
    side: Side = Side.TOP,
) -> List[TransferOp]:
    """
    可動原子をプロトコルに従って転送操作にまとめる。

    FULL_PARALLEL は1操作、PARTIAL_PARALLEL は経路長ごとに1操作（短い順）、
    SINGLE_TWEEZER は原子ごとに1操作。
    """
    if not assignments:
        raise ValueError("plan_side には1つ以上の Assignment が必要です")

    variant = protocol.variant
    if variant == Parallelism.FULL_PARALLEL:
        return [TransferOp(k, side, tuple(assignments))]
    if variant == Parallelism.PARTIAL_PARALLEL:
        groups = {}
        for a in assignments:
            groups.setdefault(a.length, []).append(a)
        return [TransferOp(k, side, tuple(groups[n])) for n in sorted(groups)]
    return [TransferOp(k, side, (a,)) for a in assignments]


def apply_transfer(occ: Occupancy, op: TransferOp) -> Occupancy:
    """
    転送を占有状態に反映する（その場で更新して返す）。

    Raises:
        CollisionError: 経路が既に塞がれている場合
    """
    for a in op.assignments:
        if not occ.is_filled(a.source) or not straight_clear(occ, a.source, a.dest):
            raise CollisionError(
                f"layer {op.layer} {op.side.value}: {a.source}->{a.dest} が実行できません"
            )
    for a in op.assignments:
        occ.set(a.source, False)
        occ.set(a.dest, True)
    return occ


def log_transfer(log: MoveLog, op: TransferOp, continuous: bool = False) -> int:
    """
    転送を capture / travel / release のイベント列として記録する。

    バスは経路長の短い順に停止して原子を解放する。連続リリースでは最後の停止
    だけがランプ時間を要する解放として数えられる。
    """
    op_id = log.new_op()
    log.capture(STAGE, op_id, [a.source for a in op.assignments])

    position = 0
    lengths = op.distinct_lengths
    for n in lengths:
        log.travel(STAGE, op_id, n - position, op.direction)
        position = n
        dests = [a.dest for a in op.assignments if a.length == n]
        ramped = not continuous or n == lengths[-1]
        log.release(STAGE, op_id, dests, ramped=ramped)
    return op_id


def run_compression(
    occ: Occupancy, spec: GridSpec, protocol: Protocol
) -> Tuple[Occupancy, MoveLog]:
    """
    圧縮ステージ全体を実行する。

    Args:
        occ: ロード直後の L'×L' 配列（変更されない）
        spec: グリッド定義
        protocol: 並列度と解放の集計方法

    Returns:
        (最終占有状態, 圧縮ステージの MoveLog)
    """
    state = occ.copy()
    log = MoveLog()

    for k in range(1, max_layer(spec) + 1):
        for side in Side:
            assignments = find_movable(state, spec, k, side)
            if not assignments:
                continue
            for op in plan_side(assignments, protocol, k, side):
                apply_transfer(state, op)
                log_transfer(log, op, protocol.continuous_release)
            logger.debug(f"layer {k} {side.value}: {len(assignments)} 原子を転送")

    return state, log
