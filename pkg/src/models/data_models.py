"""
原子配列再配置シミュレーション用のデータモデル。
"""

import math
from enum import Enum
from typing import Dict, Literal

from pydantic import BaseModel, ConfigDict, Field, computed_field, model_validator


class Parallelism(str, Enum):
    """圧縮ステージで使う並列度のプロトコル。"""

    FULL_PARALLEL = "full"
    PARTIAL_PARALLEL = "partial"
    SINGLE_TWEEZER = "single"


class ReservoirMode(str, Enum):
    """初期配列サイズ L' の決め方。"""

    DEFAULT = "default"
    SATURATED = "saturated"
    EXPLICIT = "explicit"


class Protocol(BaseModel):
    """圧縮プロトコル（並列度 + 連続リリースの集計オプション）。"""

    model_config = ConfigDict(frozen=True)

    variant: Parallelism = Parallelism.FULL_PARALLEL
    continuous_release: bool = False

    @property
    def label(self) -> str:
        """CSVに書き出す識別子"""
        suffix = "+cr" if self.continuous_release else ""
        return f"{self.variant.value}{suffix}"


class GridSpec(BaseModel):
    """L'×L' 配列とその中央に置かれた L×L ターゲット領域の幾何。"""

    model_config = ConfigDict(frozen=True)

    L: int = Field(ge=1, description="ターゲットの一辺")
    Lprime: int = Field(ge=1, description="初期配列の一辺")
    p: float = Field(ge=0.0, le=1.0, description="充填率")

    @model_validator(mode="after")
    def _check_sizes(self) -> "GridSpec":
        if self.Lprime < self.L:
            raise ValueError(f"Lprime ({self.Lprime}) は L ({self.L}) 以上が必要です")
        return self

    @computed_field
    @property
    def offset(self) -> int:
        return (self.Lprime - self.L) // 2

    @computed_field
    @property
    def N(self) -> int:
        return self.L * self.L

    @property
    def center2(self) -> int:
        """ターゲット中心の座標の2倍（L の偶奇によらず整数になる）"""
        return 2 * self.offset + self.L - 1

    @property
    def reservoir_ratio(self) -> float:
        """r = p L'^2 / L^2（アンサンブル平均の定義）"""
        return self.p * self.Lprime**2 / self.L**2

    def in_target(self, row: int, col: int) -> bool:
        lo, hi = self.offset, self.offset + self.L
        return lo <= row < hi and lo <= col < hi

    def in_grid(self, row: int, col: int) -> bool:
        return 0 <= row < self.Lprime and 0 <= col < self.Lprime


class TimeModel(BaseModel):
    """T = (C + R) t1 + D t2 の時間モデル。t2 = l / v は導出値。"""

    model_config = ConfigDict(frozen=True)

    t1_us: float = Field(30.0, gt=0, description="捕獲・解放のランプ時間 [μs]")
    spacing_um: float = Field(2.0, gt=0, description="トラップ間隔 l [μm]")
    speed_um_per_ms: float = Field(100.0, gt=0, description="移動速度 v [μm/ms]")

    @computed_field
    @property
    def t2_us(self) -> float:
        return self.spacing_um * 1000.0 / self.speed_um_per_ms

    @classmethod
    def from_durations(
        cls, t1_us: float, t2_us: float, spacing_um: float = 2.0
    ) -> "TimeModel":
        """t1 と t2 を直接指定して作成する（速度は t2 から逆算）。"""
        return cls(
            t1_us=t1_us,
            spacing_um=spacing_um,
            speed_um_per_ms=spacing_um * 1000.0 / t2_us,
        )


class Metrics(BaseModel):
    """捕獲数 C、解放数 R、移動距離 D のステージ別集計。"""

    C_para: int = 0
    R_para: int = 0
    D_para: int = 0
    C_post: int = 0
    R_post: int = 0
    D_post: int = 0
    D_atoms: int = 0  # 原子ごとの移動距離の総和（診断用）
    ops_para: int = 0
    ops_post: int = 0

    @computed_field
    @property
    def C(self) -> int:
        return self.C_para + self.C_post

    @computed_field
    @property
    def R(self) -> int:
        return self.R_para + self.R_post

    @computed_field
    @property
    def D(self) -> int:
        return self.D_para + self.D_post

    @computed_field
    @property
    def M(self) -> float:
        return (self.C + self.R) / 2

    @computed_field
    @property
    def M_para(self) -> float:
        return (self.C_para + self.R_para) / 2

    @computed_field
    @property
    def M_post(self) -> float:
        return (self.C_post + self.R_post) / 2

    def __add__(self, other: "Metrics") -> "Metrics":
        fields = Metrics.model_fields.keys()
        return Metrics(**{f: getattr(self, f) + getattr(other, f) for f in fields})


# 試行CSVの列順（固定スキーマ）
TRIAL_COLUMNS = [
    "seed",
    "N",
    "Lprime",
    "r",
    "protocol",
    "C_para",
    "R_para",
    "D_para",
    "C_post",
    "R_post",
    "D_post",
    "C",
    "R",
    "D",
    "M",
    "T_us",
    "unfilled",
    "plan_ms",
]

# スキーマの後ろに付け足す診断列
TRIAL_EXTRA_COLUMNS = [
    "r_realized",
    "initial_vacancies",
    "D_atoms",
    "M_para",
    "M_post",
    "ops_para",
    "ops_post",
]


class TrialResult(BaseModel):
    """1回の試行（ロード→圧縮→後処理→集計）の結果。"""

    seed: int
    L: int
    Lprime: int
    p: float
    protocol: str
    metrics: Metrics
    r_realized: float
    initial_vacancies: int
    unfilled: int = Field(ge=0)
    plan_ms: float = 0.0
    T_us: float = 0.0

    @computed_field
    @property
    def N(self) -> int:
        return self.L * self.L

    @computed_field
    @property
    def r(self) -> float:
        return self.p * self.Lprime**2 / self.L**2

    @computed_field
    @property
    def success(self) -> bool:
        return self.unfilled == 0

    def to_row(self) -> Dict[str, object]:
        """試行CSVの1行に変換する。"""
        metrics = self.metrics.model_dump()
        values = {
            "seed": self.seed,
            "N": self.N,
            "Lprime": self.Lprime,
            "r": self.r,
            "protocol": self.protocol,
            "T_us": self.T_us,
            "unfilled": self.unfilled,
            "plan_ms": self.plan_ms,
            "r_realized": self.r_realized,
            "initial_vacancies": self.initial_vacancies,
            **metrics,
        }
        return {col: values[col] for col in TRIAL_COLUMNS + TRIAL_EXTRA_COLUMNS}


class QuantityStats(BaseModel):
    """1つの量の平均・標準偏差・標準誤差。"""

    mean: float
    std: float = Field(ge=0.0)
    sem: float = Field(ge=0.0)


class EnsembleStats(BaseModel):
    """同一条件 (N, L', protocol) の試行集合の統計。"""

    L: int
    Lprime: int
    p: float
    protocol: str
    n_trials: int = Field(ge=1)
    n_success: int = Field(ge=0)
    quantities: Dict[str, QuantityStats] = {}

    @computed_field
    @property
    def N(self) -> int:
        return self.L * self.L

    @computed_field
    @property
    def r(self) -> float:
        return self.p * self.Lprime**2 / self.L**2

    @computed_field
    @property
    def failure_rate(self) -> float:
        return 1.0 - self.n_success / self.n_trials

    def mean(self, quantity: str) -> float:
        return self.quantities[quantity].mean

    def std(self, quantity: str) -> float:
        return self.quantities[quantity].std

    def to_row(self) -> Dict[str, object]:
        """統計CSVの1行に変換する（_mean/_std/_sem 接尾辞）。"""
        row: Dict[str, object] = {
            "N": self.N,
            "L": self.L,
            "Lprime": self.Lprime,
            "p": self.p,
            "r": self.r,
            "protocol": self.protocol,
            "n_trials": self.n_trials,
            "n_success": self.n_success,
            "failure_rate": self.failure_rate,
        }
        for name, stats in self.quantities.items():
            row[f"{name}_mean"] = stats.mean
            row[f"{name}_std"] = stats.std
            row[f"{name}_sem"] = stats.sem
        return row


FitModel = Literal["linear_sqrt", "power_3_2", "power_law", "exp_decay"]


class FitResult(BaseModel):
    """スケーリング則のフィット結果。"""

    model: FitModel
    x: str = "N"
    y: str = "M_mean"
    coefficients: Dict[str, float]
    stderr: Dict[str, float] = {}
    residual_norm: float = Field(ge=0.0)
    n_points: int = Field(ge=1)

    def predict(self, x: float) -> float:
        c = self.coefficients
        if self.model == "linear_sqrt":
            return c["a"] * x + c["b"] * math.sqrt(x)
        if self.model == "power_3_2":
            return c["c"] * x**1.5
        if self.model == "power_law":
            return c["A"] * x ** c["alpha"]
        return c["A"] * math.exp(-c["k"] * x)

    def to_footer(self) -> str:
        """統計CSV末尾に付けるコメント行"""
        coeffs = " ".join(f"{k}={v:.6g}" for k, v in self.coefficients.items())
        errs = " ".join(f"se_{k}={v:.3g}" for k, v in self.stderr.items())
        parts = [
            f"# fit model={self.model} x={self.x} y={self.y}",
            coeffs,
            errs,
            f"residual={self.residual_norm:.6g} points={self.n_points}",
        ]
        return " ".join(p for p in parts if p)
