"""
集計とスケーリング解析。アンサンブル実行は src.analysis.ensemble から使う。
"""

from .fitting import fit_exp_decay, fit_linear_sqrt, fit_n32, fit_power_law
from .metrics import tally, time_of

__all__ = [
    "fit_exp_decay",
    "fit_linear_sqrt",
    "fit_n32",
    "fit_power_law",
    "tally",
    "time_of",
]
