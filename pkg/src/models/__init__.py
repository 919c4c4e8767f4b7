from .data_models import (
    EnsembleStats,
    FitResult,
    GridSpec,
    Metrics,
    Parallelism,
    Protocol,
    QuantityStats,
    ReservoirMode,
    TimeModel,
    TrialResult,
)
from .move_models import (
    Assignment,
    FillMove,
    MoveEvent,
    MoveLog,
    Path,
    Side,
    Site,
    TransferOp,
)
from .run_config import RunConfig

__all__ = [
    "EnsembleStats",
    "FitResult",
    "GridSpec",
    "Metrics",
    "Parallelism",
    "Protocol",
    "QuantityStats",
    "ReservoirMode",
    "TimeModel",
    "TrialResult",
    "Assignment",
    "FillMove",
    "MoveEvent",
    "MoveLog",
    "Path",
    "Side",
    "Site",
    "TransferOp",
    "RunConfig",
]
