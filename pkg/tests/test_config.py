"""
設定と実行設定ファイルのテスト
"""
import os
from dataclasses import fields
from unittest.mock import patch

import pytest

from src.config.settings import AppSettings
from src.models.data_models import Parallelism, ReservoirMode
from src.models.run_config import RunConfig


def test_settings_defaults():
    settings = AppSettings()
    assert settings.simulation.filling_fraction == 0.5
    assert settings.simulation.default_trials == 10000
    assert settings.timing.t1_us == 30.0
    assert settings.output.output_dir == "results"
    names = [f.name for f in fields(settings)]
    assert names == ["simulation", "timing", "output", "logging"]


def test_settings_from_env():
    env = {
        "LOG_LEVEL": "DEBUG",
        "PCA_OUTPUT_DIR": "/tmp/pca",
        "PCA_WORKERS": "4",
        "PCA_TRIALS": "50",
        "PCA_ACCEPTANCE_TRIALS": "2000",
    }
    with patch.dict(os.environ, env):
        settings = AppSettings.from_env()
    assert settings.logging.log_level == "DEBUG"
    assert settings.output.output_dir == "/tmp/pca"
    assert settings.simulation.workers == 4
    assert settings.simulation.default_trials == 50
    assert settings.simulation.acceptance_trials == 2000


def test_run_config_roundtrip(tmp_path):
    config = RunConfig(
        L=10,
        reservoir=ReservoirMode.EXPLICIT,
        lprime=17,
        p=0.6,
        protocol=Parallelism.PARTIAL_PARALLEL,
        continuous_release=True,
        n_trials=25,
        base_seed=9,
        timing=False,
        schedule_json="sched.json",
    )
    path = tmp_path / "run.cfg"
    path.write_text(config.dump(), encoding="utf-8")
    assert RunConfig.from_file(path) == config


def test_run_config_file_format():
    text = RunConfig(L=6).dump()
    assert "L=6\n" in text
    assert "timing=true\n" in text
    assert "lprime" not in text


def test_overrides_win(tmp_path):
    path = tmp_path / "run.cfg"
    path.write_text("L=6\np=0.7\n", encoding="utf-8")
    config = RunConfig.from_file(path, {"p": 0.4, "n_trials": None})
    assert config.L == 6
    assert config.p == 0.4
    assert config.n_trials == 1


def test_unknown_key_rejected(tmp_path):
    path = tmp_path / "run.cfg"
    path.write_text("L=6\ncolour=blue\n", encoding="utf-8")
    with pytest.raises(ValueError):
        RunConfig.from_file(path)


@pytest.mark.parametrize(
    "values",
    [{"L": 0}, {"p": 0.0}, {"reservoir": "explicit"}, {"reservoir": "explicit", "lprime": 3, "L": 5}],
)
def test_invalid_spec_rejected(values):
    with pytest.raises(ValueError):
        RunConfig(**values)


def test_saturated_ratio():
    spec = RunConfig(L=14, reservoir="saturated").to_spec()
    assert spec.reservoir_ratio == pytest.approx(3.125)


def test_output_path(tmp_path):
    config = RunConfig(output_dir=str(tmp_path))
    assert config.output_path("trials.csv") == tmp_path / "trials.csv"
    assert config.output_path("/abs/x.csv").is_absolute()


def test_setup_logging_rejects_unknown_level():
    from src.utils import setup_logging

    with pytest.raises(ValueError):
        setup_logging("LOUD")
