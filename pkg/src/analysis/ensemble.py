"""
Monte Carlo harness: repeated trials, aggregation and parameter sweeps.
"""

import math
from concurrent.futures import ProcessPoolExecutor
from functools import partial
from typing import Dict, List, Literal, Optional, Sequence

import numpy as np
import pandas as pd

from ..models.data_models import (
    EnsembleStats,
    GridSpec,
    Protocol,
    QuantityStats,
    ReservoirMode,
    TimeModel,
    TrialResult,
)
from ..models.run_config import RunConfig
from ..pipeline.pipeline import run_trial
from ..utils import get_logger

logger = get_logger(__name__)

# Quantities aggregated over successful trials
QUANTITIES = [
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
    "M_para",
    "M_post",
    "D_atoms",
    "ops_para",
    "ops_post",
    "T_us",
    "plan_ms",
]

SweepVariable = Literal["N", "Lprime"]


def run_trials(
    spec: GridSpec,
    protocol: Protocol,
    n_trials: int = 1,
    base_seed: int = 0,
    time_model: Optional[TimeModel] = None,
    workers: int = 1,
    timing: bool = True,
    seeds: Optional[Sequence[int]] = None,
) -> List[TrialResult]:
    """
    Run trials with seeds base_seed .. base_seed + n_trials - 1.

    Args:
        spec: Grid definition shared by every trial.
        protocol: Compression protocol.
        n_trials: Number of trials (ignored when seeds is given).
        base_seed: First seed.
        time_model: Time model used for T.
        workers: Process count; 1 runs in the calling process.
        timing: Record wall-clock planning time.
        seeds: Explicit seed list (duplicates allowed).

    Returns:
        Trial results in seed-list order.
    """
    if seeds is None:
        if n_trials < 1:
            raise ValueError(f"n_trials must be >= 1, got {n_trials}")
        seeds = range(base_seed, base_seed + n_trials)
    seeds = list(seeds)

    job = partial(run_trial, spec, protocol, time_model=time_model, timing=timing)
    if workers > 1 and len(seeds) > 1:
        chunk = max(1, len(seeds) // (workers * 4))
        with ProcessPoolExecutor(max_workers=workers) as pool:
            jobs = [job] * len(seeds)
            return list(pool.map(_run_seed, jobs, seeds, chunksize=chunk))
    return [job(seed=s) for s in seeds]


def _run_seed(job, seed: int) -> TrialResult:
    return job(seed=seed)


def aggregate(
    trials: Sequence[TrialResult], spec: GridSpec, protocol: Protocol
) -> EnsembleStats:
    """
    Reduce trial results to per-quantity mean, std and standard error.

    Failed trials (unfilled > 0) are excluded from the quantities and only
    counted in the failure rate. The reduction sorts by seed first, so the
    result does not depend on completion order.
    """
    if not trials:
        raise ValueError("at least one trial is required")

    ordered = sorted(trials, key=lambda t: t.seed)
    successful = [t for t in ordered if t.success]
    quantities: Dict[str, QuantityStats] = {}

    if successful:
        frame = pd.DataFrame([t.to_row() for t in successful])
        n = len(frame)
        ddof = 1 if n > 1 else 0
        for name in QUANTITIES:
            values = frame[name].to_numpy(dtype=float)
            std = float(np.std(values, ddof=ddof))
            quantities[name] = QuantityStats(
                mean=float(np.mean(values)), std=std, sem=std / math.sqrt(n)
            )

    return EnsembleStats(
        L=spec.L,
        Lprime=spec.Lprime,
        p=spec.p,
        protocol=protocol.label,
        n_trials=len(ordered),
        n_success=len(successful),
        quantities=quantities,
    )


def run_ensemble(
    spec: GridSpec,
    protocol: Protocol,
    n_trials: int,
    base_seed: int = 0,
    time_model: Optional[TimeModel] = None,
    workers: int = 1,
    seeds: Optional[Sequence[int]] = None,
) -> EnsembleStats:
    """Run an ensemble and return its statistics."""
    trials = run_trials(
        spec,
        protocol,
        n_trials,
        base_seed,
        time_model=time_model,
        workers=workers,
        seeds=seeds,
    )
    stats = aggregate(trials, spec, protocol)
    logger.info(
        f"N={spec.N} L'={spec.Lprime} {protocol.label}: "
        f"{stats.n_trials} trials, failure rate {stats.failure_rate:.3f}"
    )
    return stats


def sweep_points(
    template: RunConfig, variable: SweepVariable, grid: Sequence[int]
) -> List[RunConfig]:
    """
    Expand a sweep grid into one RunConfig per point.

    For an N-grid every value must be a perfect square (L = sqrt(N)) and the
    template's reservoir mode is kept. For an L'-grid the template's L is kept
    and each value becomes an explicit L'.
    """
    if not grid:
        raise ValueError("sweep grid is empty")

    base = template.model_dump()
    points = []
    for value in grid:
        values = dict(base)
        if variable == "N":
            if value < 1 or math.isqrt(value) ** 2 != value:
                raise ValueError(f"N={value} is not a perfect square")
            values["L"] = math.isqrt(value)
        elif variable == "Lprime":
            values["reservoir"] = ReservoirMode.EXPLICIT
            values["lprime"] = value
        else:
            raise ValueError(f"unknown sweep variable: {variable}")
        points.append(RunConfig(**values))
    return points


def sweep(
    template: RunConfig,
    variable: SweepVariable,
    grid: Sequence[int],
    time_model: Optional[TimeModel] = None,
) -> List[EnsembleStats]:
    """Run one ensemble per grid point and return the table of statistics."""
    rows = []
    for config in sweep_points(template, variable, grid):
        rows.append(
            run_ensemble(
                config.to_spec(),
                config.to_protocol(),
                config.n_trials,
                config.base_seed,
                time_model=time_model or config.to_time_model(),
                workers=config.workers,
            )
        )
    return rows

