"""
アプリケーション設定モジュール。
"""

import os
from dataclasses import dataclass, field
from typing import Optional


@dataclass
class SimulationSettings:
    """モンテカルロ試行の設定"""

    filling_fraction: float = 0.5
    default_trials: int = 10000
    acceptance_trials: int = 300
    base_seed: int = 0
    workers: int = 1


@dataclass
class TimingSettings:
    """再配置時間モデルの既定値（各レンジの中央値）"""

    t1_us: float = 30.0
    spacing_um: float = 2.0
    speed_um_per_ms: float = 100.0


@dataclass
class OutputSettings:
    """出力ファイル関連の設定"""

    output_dir: str = "results"
    trial_csv: str = "trials.csv"
    stats_csv: str = "stats.csv"


@dataclass
class LoggingSettings:
    """ロギング関連の設定"""

    log_level: str = "INFO"
    log_file: Optional[str] = None
    log_format: str = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"


@dataclass
class AppSettings:
    """アプリケーション全体の設定"""

    simulation: SimulationSettings = field(default_factory=SimulationSettings)
    timing: TimingSettings = field(default_factory=TimingSettings)
    output: OutputSettings = field(default_factory=OutputSettings)
    logging: LoggingSettings = field(default_factory=LoggingSettings)

    @classmethod
    def from_env(cls) -> "AppSettings":
        """環境変数から設定を読み込む"""
        settings = cls()

        # 環境変数からの上書き
        if log_level := os.getenv("LOG_LEVEL"):
            settings.logging.log_level = log_level

        if log_file := os.getenv("LOG_FILE"):
            settings.logging.log_file = log_file

        if output_dir := os.getenv("PCA_OUTPUT_DIR"):
            settings.output.output_dir = output_dir

        if workers := os.getenv("PCA_WORKERS"):
            settings.simulation.workers = int(workers)

        if trials := os.getenv("PCA_TRIALS"):
            settings.simulation.default_trials = int(trials)

        if acceptance := os.getenv("PCA_ACCEPTANCE_TRIALS"):
            settings.simulation.acceptance_trials = int(acceptance)

        return settings


# グローバル設定インスタンス
settings = AppSettings.from_env()


def get_settings() -> AppSettings:
    """現在の設定を取得する"""
    return settings


def update_settings(**kwargs) -> None:
    """設定を更新する"""
    global settings
    for key, value in kwargs.items():
        if hasattr(settings, key):
            setattr(settings, key, value)
