"""
1試行分の再配置パイプライン: ロード → 並列圧縮 → 後処理 → 集計。
"""

import time
from dataclasses import dataclass
from typing import Any, Dict, List, Optional

from ..analysis.metrics import tally, time_of
from ..loading import (
    Occupancy,
    load_stochastic,
    realized_ratio,
    target_vacancies,
)
from ..models.data_models import GridSpec, Protocol, TimeModel, TrialResult
from ..models.move_models import MoveLog, Site
from ..utils import get_logger
from .compression import run_compression
from .error_handler import handle_planning_error
from .postprocess import run_postprocess

logger = get_logger(__name__)


@dataclass
class PlanResult:
    """計画結果（最終状態、ステージをまたいだ MoveLog、埋まらなかった空き）。"""

    initial: Occupancy
    final: Occupancy
    log: MoveLog
    unfilled: List[Site]
    plan_ms: float = 0.0

    @property
    def success(self) -> bool:
        return not self.unfilled


class RearrangementPipeline:
    """並列圧縮アルゴリズムのパイプライン"""

    def __init__(
        self,
        protocol: Optional[Protocol] = None,
        time_model: Optional[TimeModel] = None,
    ):
        self.protocol = protocol or Protocol()
        self.time_model = time_model or TimeModel()

    @handle_planning_error
    def plan(self, occ: Occupancy, spec: GridSpec) -> PlanResult:
        """
        与えられた初期配列に対して2ステージの計画を実行する。

        Args:
            occ: 初期占有状態
            spec: グリッド定義

        Returns:
            計画結果
        """
        started = time.perf_counter()
        compressed, compression_log = run_compression(occ, spec, self.protocol)
        final, post_log, unfilled = run_postprocess(compressed, spec)
        plan_ms = (time.perf_counter() - started) * 1000.0

        return PlanResult(
            initial=occ,
            final=final,
            log=compression_log + post_log,
            unfilled=unfilled,
            plan_ms=plan_ms,
        )

    def run(self, spec: GridSpec, seed: int, timing: bool = True) -> TrialResult:
        """
        1試行を実行する。

        Args:
            spec: グリッド定義
            seed: 初期ロードの乱数シード
            timing: False なら plan_ms を 0 として記録する（出力を再現可能にする）

        Returns:
            試行結果（失敗は unfilled > 0 として表す）
        """
        occ = load_stochastic(spec, seed)
        result = self.plan(occ, spec)
        metrics = tally(result.log)

        trial = TrialResult(
            seed=seed,
            L=spec.L,
            Lprime=spec.Lprime,
            p=spec.p,
            protocol=self.protocol.label,
            metrics=metrics,
            r_realized=realized_ratio(occ, spec),
            initial_vacancies=target_vacancies(occ, spec),
            unfilled=len(result.unfilled),
            plan_ms=result.plan_ms if timing else 0.0,
            T_us=time_of(metrics, self.time_model),
        )
        if not trial.success:
            logger.warning(
                f"seed {seed}: {trial.unfilled} 個のターゲットが埋まりませんでした"
            )
        logger.debug(f"seed {seed}: M={metrics.M} D={metrics.D} T={trial.T_us:.1f}us")
        return trial


def run_trial(
    spec: GridSpec,
    protocol: Optional[Protocol] = None,
    seed: int = 0,
    time_model: Optional[TimeModel] = None,
    timing: bool = True,
) -> TrialResult:
    """1試行を実行する（プロセスプールからも呼べるモジュール関数）。"""
    return RearrangementPipeline(protocol, time_model).run(spec, seed, timing=timing)


def format_trial_results(trial: Optional[TrialResult]) -> Dict[str, Any]:
    """
    試行結果を表示用にフォーマットする。

    Args:
        trial: 試行結果

    Returns:
        フォーマットされた結果の辞書
    """
    if not trial:
        return {}

    m = trial.metrics
    return {
        "N": trial.N,
        "Lprime": trial.Lprime,
        "r": round(trial.r, 4),
        "M": m.M,
        "D": m.D,
        "T_us": trial.T_us,
        "success": trial.success,
        "unfilled": trial.unfilled,
    }
