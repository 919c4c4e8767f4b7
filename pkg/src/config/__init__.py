"""
設定モジュール。シミュレーション、時間モデル、出力、ロギングの既定値を持つ。
"""

from .settings import (
    AppSettings,
    LoggingSettings,
    OutputSettings,
    SimulationSettings,
    TimingSettings,
    get_settings,
    settings,
    update_settings,
)

__all__ = [
    "AppSettings",
    "LoggingSettings",
    "OutputSettings",
    "SimulationSettings",
    "TimingSettings",
    "get_settings",
    "settings",
    "update_settings",
]
