"""
MoveLog をステップごとに再生し、衝突がないことを検証する。
"""

from typing import Dict, List

from ..loading.occupancy import Occupancy
from ..models.move_models import MoveLog, Site
from .error_handler import CollisionError


def replay_log(log: MoveLog, occ: Occupancy) -> Occupancy:
    """
    初期占有状態に MoveLog を適用して最終状態を返す。

    capture で持ち上げた原子を travel で1ステップずつ動かし、各ステップで
    入るサイトが空であることを確かめる。release はその位置にいる保持原子を
    空きトラップへ戻す。

    Raises:
        CollisionError: 充填トラップへの進入、存在しない原子の捕獲、
            保持していない原子の解放、または原子を保持したまま操作が終わった場合
    """
    state = occ.copy()
    held: List[Site] = []
    current_op = None

    def finish_op():
        if held:
            raise CollisionError(f"op {current_op}: {len(held)} 原子が解放されていません")

    for event in log:
        if event.op_id != current_op:
            finish_op()
            current_op = event.op_id

        if event.kind == "capture":
            for site in event.sites:
                if not state.contains(site) or not state.is_filled(site):
                    raise CollisionError(f"op {event.op_id}: {site} に原子がありません")
                state.set(site, False)
                held.append(site)

        elif event.kind == "travel":
            dr, dc = event.direction
            for _ in range(event.steps):
                moved = []
                for site in held:
                    nxt = Site(site.row + dr, site.col + dc)
                    if not state.contains(nxt) or state.is_filled(nxt):
                        raise CollisionError(
                            f"op {event.op_id}: {site} -> {nxt} で充填トラップに衝突します"
                        )
                    moved.append(nxt)
                held = moved

        else:
            positions: Dict[Site, int] = {s: i for i, s in enumerate(held)}
            for site in event.sites:
                if site not in positions:
                    raise CollisionError(
                        f"op {event.op_id}: {site} に保持中の原子がありません"
                    )
                if state.is_filled(site):
                    raise CollisionError(f"op {event.op_id}: {site} は既に充填済みです")
                state.set(site, True)
            released = set(event.sites)
            held = [s for s in held if s not in released]

    finish_op()
    return state
