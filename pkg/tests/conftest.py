"""
テスト共通のフィクスチャ
"""
from pathlib import Path

import pytest

from src.loading import Occupancy, read_snapshot
from src.models.data_models import GridSpec, Parallelism, Protocol, TimeModel
from src.models.move_models import Site

DATA_DIR = Path(__file__).parent / "data"

# 手計算で追跡した 6x6 盤面（ターゲット = グリッド全体）
HAND_TRACE_FILLED = [
    (0, 0), (0, 2), (0, 5), (1, 2), (1, 3), (2, 2),
    (3, 1), (4, 0), (4, 5), (5, 1), (5, 4),
]


def make_board(size, filled):
    """指定サイトを充填した size x size の盤面"""
    occ = Occupancy.empty(size)
    for r, c in filled:
        occ.set(Site(r, c), True)
    return occ


@pytest.fixture
def data_dir():
    return DATA_DIR


@pytest.fixture
def hand_trace_spec():
    return GridSpec(L=6, Lprime=6, p=0.5)


@pytest.fixture
def hand_trace_board():
    return read_snapshot(DATA_DIR / "board_6x6.txt")


@pytest.fixture
def full_protocol():
    return Protocol(variant=Parallelism.FULL_PARALLEL)


@pytest.fixture
def time_model():
    """t1 = 30us, t2 = 20us"""
    return TimeModel(t1_us=30.0, spacing_um=2.0, speed_um_per_ms=100.0)


@pytest.fixture
def board():
    """make_board をテストから呼ぶためのフィクスチャ"""
    return make_board
