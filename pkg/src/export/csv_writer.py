"""
試行CSV・統計CSVの書き出しと読み込み。
"""

from pathlib import Path
from typing import Sequence, Union

import pandas as pd

from ..models.data_models import (
    TRIAL_COLUMNS,
    TRIAL_EXTRA_COLUMNS,
    EnsembleStats,
    FitResult,
    TrialResult,
)

_FLOAT_FORMAT = "%.6f"


def trials_frame(trials: Sequence[TrialResult]) -> pd.DataFrame:
    """試行結果を固定スキーマの表にする。"""
    return pd.DataFrame(
        [t.to_row() for t in trials], columns=TRIAL_COLUMNS + TRIAL_EXTRA_COLUMNS
    )


def stats_frame(rows: Sequence[EnsembleStats]) -> pd.DataFrame:
    """統計を1グリッド点1行の表にする。"""
    return pd.DataFrame([row.to_row() for row in rows])


def _prepare(path: Union[str, Path]) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    return path


def write_trials_csv(trials: Sequence[TrialResult], path: Union[str, Path]) -> Path:
    path = _prepare(path)
    trials_frame(trials).to_csv(path, index=False, float_format=_FLOAT_FORMAT)
    return path


def write_stats_csv(
    rows: Sequence[EnsembleStats],
    path: Union[str, Path],
    fits: Sequence[FitResult] = (),
) -> Path:
    """統計CSVを書き、フィット結果を '#' で始まるフッター行として付け足す。"""
    path = _prepare(path)
    stats_frame(rows).to_csv(path, index=False, float_format=_FLOAT_FORMAT)
    if fits:
        with open(path, "a", encoding="utf-8") as f:
            for fit in fits:
                f.write(fit.to_footer() + "\n")
    return path


def read_stats_csv(path: Union[str, Path]) -> pd.DataFrame:
    """統計CSVを読み込む（フッター行は無視する）。"""
    return pd.read_csv(path, comment="#")
