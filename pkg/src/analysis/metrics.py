"""
MoveLog からの集計: 捕獲数 C、解放数 R、移動距離 D と T = (C + R) t1 + D t2。
"""

import math
from typing import Dict, Tuple

from ..models.data_models import Metrics, TimeModel
from ..models.move_models import MoveLog

_SUFFIX = {"compression": "para", "postprocess": "post"}


def tally(log: MoveLog) -> Metrics:
    """
    イベント数（原子数ではない）を数えて Metrics を作る。

    D はバスの移動ステップの合計（並列転送では最大経路長）、D_atoms は
    原子ごとの移動距離の合計。ランプを伴わない連続リリースは R に数えない。
    """
    counts: Dict[str, int] = dict.fromkeys(Metrics.model_fields, 0)
    travelled: Dict[Tuple[str, int], int] = {}
    ops = set()

    for event in log:
        suffix = _SUFFIX[event.stage]
        key = (event.stage, event.op_id)
        ops.add(key)
        if event.kind == "capture":
            counts[f"C_{suffix}"] += 1
        elif event.kind == "travel":
            counts[f"D_{suffix}"] += event.steps
            travelled[key] = travelled.get(key, 0) + event.steps
        else:
            if event.ramped:
                counts[f"R_{suffix}"] += 1
            counts["D_atoms"] += event.n_atoms * travelled.get(key, 0)

    counts["ops_para"] = sum(1 for stage, _ in ops if stage == "compression")
    counts["ops_post"] = sum(1 for stage, _ in ops if stage == "postprocess")
    return Metrics(**counts)


def time_of(metrics: Metrics, time_model: TimeModel) -> float:
    """
    総再配置時間 T [μs]。

    捕獲・解放1回ごとの t1 と移動1歩ごとの t2 を math.fsum で足す。スケジュールの
    合計も同じ項の和なので、両者は丸めまで一致する。
    """
    terms = [time_model.t1_us] * (metrics.C + metrics.R) + [time_model.t2_us] * metrics.D
    return math.fsum(terms)
