from .loader import load_stochastic, realized_ratio, reservoir_ratio, target_vacancies
from .occupancy import Occupancy, read_snapshot, write_snapshot
from .rng import CounterRNG

__all__ = [
    "CounterRNG",
    "Occupancy",
    "load_stochastic",
    "read_snapshot",
    "realized_ratio",
    "reservoir_ratio",
    "target_vacancies",
    "write_snapshot",
]
