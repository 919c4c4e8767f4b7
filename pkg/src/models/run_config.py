"""
実行設定モデル。設定ファイル（key=value 形式）とCLIフラグで共通のフィールドを持つ。
"""

from pathlib import Path
from typing import Any, Dict, Optional, Union

from dotenv import dotenv_values
from pydantic import BaseModel, Field, model_validator

from .data_models import GridSpec, Parallelism, Protocol, ReservoirMode, TimeModel


class RunConfig(BaseModel):
    """run / sweep の設定。make_spec の事前条件を生成時に検証する。"""

    L: int = Field(14, ge=1)
    reservoir: ReservoirMode = ReservoirMode.DEFAULT
    lprime: Optional[int] = None
    p: float = Field(0.5, ge=0.0, le=1.0)
    protocol: Parallelism = Parallelism.FULL_PARALLEL
    continuous_release: bool = False
    n_trials: int = Field(1, ge=1)
    base_seed: int = Field(0, ge=0)
    t1_us: float = Field(30.0, gt=0)
    spacing_um: float = Field(2.0, gt=0)
    speed_um_per_ms: float = Field(100.0, gt=0)
    workers: int = Field(1, ge=1)
    timing: bool = True
    output_dir: str = "results"
    trial_csv: str = "trials.csv"
    stats_csv: str = "stats.csv"
    schedule_json: Optional[str] = None

    @model_validator(mode="after")
    def _check_spec(self) -> "RunConfig":
        # 実行前にジオメトリが構築できることを確認する
        self.to_spec()
        return self

    def to_spec(self) -> GridSpec:
        from ..lattice import make_spec

        lprime = self.lprime if self.reservoir == ReservoirMode.EXPLICIT else None
        return make_spec(self.L, self.p, self.reservoir, lprime=lprime)

    def to_protocol(self) -> Protocol:
        return Protocol(
            variant=self.protocol, continuous_release=self.continuous_release
        )

    def to_time_model(self) -> TimeModel:
        return TimeModel(
            t1_us=self.t1_us,
            spacing_um=self.spacing_um,
            speed_um_per_ms=self.speed_um_per_ms,
        )

    def output_path(self, name: str) -> Path:
        path = Path(name)
        return path if path.is_absolute() else Path(self.output_dir) / path

    def dump(self) -> str:
        """key=value 行に書き出す（None のキーは省略）。"""
        lines = []
        for key, value in self.model_dump(mode="json").items():
            if value is None:
                continue
            if isinstance(value, bool):
                value = "true" if value else "false"
            lines.append(f"{key}={value}")
        return "\n".join(lines) + "\n"

    @classmethod
    def from_file(
        cls, path: Union[str, Path], overrides: Optional[Dict[str, Any]] = None
    ) -> "RunConfig":
        """
        設定ファイルを読み込む。

        Args:
            path: key=value 形式の設定ファイル
            overrides: ファイルの値を上書きする値（CLIフラグなど、None は無視）

        Returns:
            検証済みの設定
        """
        values: Dict[str, Any] = {
            k: v for k, v in dotenv_values(path).items() if v not in (None, "")
        }
        return cls.from_values(values, overrides)

    @classmethod
    def from_values(
        cls, values: Dict[str, Any], overrides: Optional[Dict[str, Any]] = None
    ) -> "RunConfig":
        merged = dict(values)
        for key, value in (overrides or {}).items():
            if value is not None:
                merged[key] = value
        unknown = set(merged) - set(cls.model_fields)
        if unknown:
            raise ValueError(f"未知の設定キーです: {', '.join(sorted(unknown))}")
        return cls(**merged)
