"""
スケーリング則フィットのテスト
"""
import math

import numpy as np
import pytest

from src.analysis.fitting import fit_exp_decay, fit_linear_sqrt, fit_n32, fit_power_law

GRID = [36, 100, 196, 484, 1024]


def test_linear_sqrt_exact_recovery():
    points = [(n, 0.35 * n + 1.44 * math.sqrt(n)) for n in GRID]
    fit = fit_linear_sqrt(points)
    assert fit.coefficients["a"] == pytest.approx(0.35, abs=1e-9)
    assert fit.coefficients["b"] == pytest.approx(1.44, abs=1e-9)
    assert fit.residual_norm == pytest.approx(0.0, abs=1e-9)
    assert fit.predict(196) == pytest.approx(0.35 * 196 + 1.44 * 14)


def test_linear_sqrt_identity():
    fit = fit_linear_sqrt([(n, float(n)) for n in GRID])
    assert fit.coefficients["a"] == pytest.approx(1.0, abs=1e-9)
    assert fit.coefficients["b"] == pytest.approx(0.0, abs=1e-9)


def test_linear_sqrt_noisy_within_standard_errors():
    rng = np.random.default_rng(11)
    ns = np.repeat(GRID, 20)
    ys = 0.35 * ns + 1.44 * np.sqrt(ns) + rng.normal(0.0, 1.0, ns.size)
    fit = fit_linear_sqrt(list(zip(ns, ys)))
    assert abs(fit.coefficients["a"] - 0.35) < 3 * fit.stderr["a"]
    assert abs(fit.coefficients["b"] - 1.44) < 3 * fit.stderr["b"]


def test_linear_sqrt_rejects_degenerate():
    with pytest.raises(ValueError):
        fit_linear_sqrt([(100, 1.0), (100, 2.0)])


def test_exp_decay_exact_recovery():
    rs = [1.125, 1.5, 2.0, 2.5, 3.125]
    fit = fit_exp_decay([(r, 166.1 * math.exp(-1.384 * r)) for r in rs])
    assert fit.coefficients["A"] == pytest.approx(166.1, abs=1e-9)
    assert fit.coefficients["k"] == pytest.approx(1.384, abs=1e-9)


def test_exp_decay_constant():
    fit = fit_exp_decay([(1.0, 5.0), (2.0, 5.0), (3.0, 5.0)])
    assert fit.coefficients["k"] == pytest.approx(0.0, abs=1e-12)


def test_exp_decay_rejects_non_positive():
    with pytest.raises(ValueError):
        fit_exp_decay([(1.0, 1.0), (2.0, 0.0)])


def test_power_law_exponent():
    fit = fit_power_law([(n, 0.079 * n**1.5) for n in GRID])
    assert fit.coefficients["alpha"] == pytest.approx(1.5, abs=1e-9)
    assert fit.coefficients["A"] == pytest.approx(0.079, rel=1e-9)


def test_n32_coefficient():
    fit = fit_n32([(n, 0.079 * n**1.5) for n in GRID])
    assert fit.coefficients["c"] == pytest.approx(0.079, rel=1e-6)


def test_footer_is_comment_line():
    fit = fit_linear_sqrt([(n, float(n)) for n in GRID])
    footer = fit.to_footer()
    assert footer.startswith("# fit model=linear_sqrt")
    assert "\n" not in footer
