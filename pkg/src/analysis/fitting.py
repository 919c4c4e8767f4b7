"""
Scaling-law fits for ensemble means.
"""

from typing import Sequence, Tuple

import numpy as np
from scipy.optimize import curve_fit

from ..models.data_models import FitResult

Point = Tuple[float, float]


def _as_arrays(points: Sequence[Point]) -> Tuple[np.ndarray, np.ndarray]:
    data = np.asarray(points, dtype=float)
    if data.ndim != 2 or data.shape[1] != 2:
        raise ValueError("points must be a sequence of (x, y) pairs")
    x, y = data[:, 0], data[:, 1]
    if len(np.unique(x)) < 2:
        raise ValueError("at least two distinct x values are required")
    return x, y


def _stderr(design: np.ndarray, residuals: np.ndarray) -> np.ndarray:
    """Coefficient standard errors of an ordinary least-squares fit."""
    dof = design.shape[0] - design.shape[1]
    if dof <= 0:
        return np.zeros(design.shape[1])
    sigma2 = float(residuals @ residuals) / dof
    cov = sigma2 * np.linalg.pinv(design.T @ design)
    return np.sqrt(np.clip(np.diag(cov), 0.0, None))


def fit_linear_sqrt(points: Sequence[Point], y: str = "M_mean") -> FitResult:
    """
    Fit y = a*N + b*sqrt(N) by least squares.

    Args:
        points: (N, y) pairs with at least two distinct N > 0.
        y: Name of the fitted column, recorded in the result.

    Returns:
        FitResult with coefficients a, b.
    """
    x, values = _as_arrays(points)
    if (x <= 0).any():
        raise ValueError("N must be positive")

    design = np.column_stack([x, np.sqrt(x)])
    coef, *_ = np.linalg.lstsq(design, values, rcond=None)
    residuals = values - design @ coef
    se = _stderr(design, residuals)
    return FitResult(
        model="linear_sqrt",
        x="N",
        y=y,
        coefficients={"a": float(coef[0]), "b": float(coef[1])},
        stderr={"a": float(se[0]), "b": float(se[1])},
        residual_norm=float(np.linalg.norm(residuals)),
        n_points=len(x),
    )


def fit_exp_decay(points: Sequence[Point], y: str = "M_post_mean") -> FitResult:
    """
    Fit y = A*exp(-k*r) by least squares on log(y).

    Args:
        points: (r, y) pairs with at least two distinct r and all y > 0.
        y: Name of the fitted column.

    Returns:
        FitResult with coefficients A, k; the residual norm is measured on y.
    """
    x, values = _as_arrays(points)
    if (values <= 0).any():
        raise ValueError("exponential decay fit needs y > 0 for every point")

    design = np.column_stack([np.ones_like(x), -x])
    coef, *_ = np.linalg.lstsq(design, np.log(values), rcond=None)
    log_residuals = np.log(values) - design @ coef
    se = _stderr(design, log_residuals)
    amplitude, rate = float(np.exp(coef[0])), float(coef[1])
    residuals = values - amplitude * np.exp(-rate * x)
    return FitResult(
        model="exp_decay",
        x="r",
        y=y,
        coefficients={"A": amplitude, "k": rate},
        stderr={"A": amplitude * float(se[0]), "k": float(se[1])},
        residual_norm=float(np.linalg.norm(residuals)),
        n_points=len(x),
    )


def fit_power_law(
    points: Sequence[Point], x: str = "N", y: str = "D_post_mean"
) -> FitResult:
    """Fit y = A*x**alpha on a log-log scale (used for scaling exponents)."""
    xs, values = _as_arrays(points)
    if (xs <= 0).any() or (values <= 0).any():
        raise ValueError("power-law fit needs positive x and y")

    design = np.column_stack([np.ones_like(xs), np.log(xs)])
    coef, *_ = np.linalg.lstsq(design, np.log(values), rcond=None)
    log_residuals = np.log(values) - design @ coef
    se = _stderr(design, log_residuals)
    amplitude, alpha = float(np.exp(coef[0])), float(coef[1])
    residuals = values - amplitude * xs**alpha
    return FitResult(
        model="power_law",
        x=x,
        y=y,
        coefficients={"A": amplitude, "alpha": alpha},
        stderr={"A": amplitude * float(se[0]), "alpha": float(se[1])},
        residual_norm=float(np.linalg.norm(residuals)),
        n_points=len(xs),
    )


def _n32(n, c):
    return c * np.power(n, 1.5)


def fit_n32(points: Sequence[Point], y: str = "D_post_mean") -> FitResult:
    """Fit the one-parameter law y = c*N**1.5."""
    xs, values = _as_arrays(points)
    popt, pcov = curve_fit(_n32, xs, values, p0=(1.0,))
    residuals = values - _n32(xs, *popt)
    se = float(np.sqrt(pcov[0, 0])) if np.isfinite(pcov[0, 0]) else 0.0
    return FitResult(
        model="power_3_2",
        x="N",
        y=y,
        coefficients={"c": float(popt[0])},
        stderr={"c": se},
        residual_norm=float(np.linalg.norm(residuals)),
        n_points=len(xs),
    )
