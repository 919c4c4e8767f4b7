"""
移動スケジュールの書き出しと再生のテスト
"""
import math

import pytest

from src.analysis.metrics import tally, time_of
from src.export import (
    ScheduleFile,
    export_schedule,
    read_schedule,
    replay_schedule,
    write_schedule,
)
from src.models.data_models import GridSpec, TimeModel
from src.models.move_models import DOWN, MoveLog, Site
from src.pipeline.pipeline import RearrangementPipeline


def test_empty_log(time_model):
    spec = GridSpec(L=2, Lprime=4, p=0.5)
    schedule = export_schedule(MoveLog(), spec, time_model)
    assert schedule.records == []
    assert schedule.total_us == 0.0
    assert schedule.header["target"] == {"row": 1, "col": 1, "size": 2}


def test_single_fill_move_records(time_model):
    spec = GridSpec(L=2, Lprime=4, p=0.5)
    log = MoveLog()
    op = log.new_op()
    log.capture("postprocess", op, [Site(0, 1)])
    log.travel("postprocess", op, 2, DOWN)
    log.release("postprocess", op, [Site(2, 1)])

    schedule = export_schedule(log, spec, time_model)
    assert [r.event for r in schedule.records] == ["capture", "sweep", "release"]
    assert [r.duration_us for r in schedule.records] == [30.0, 40.0, 30.0]
    assert [r.tones for r in schedule.records] == [1, 1, 0]
    assert schedule.total_us == pytest.approx(2 * 30.0 + 2 * 20.0)


def test_replay_reproduces_plan(tmp_path, board, time_model):
    spec = GridSpec(L=2, Lprime=6, p=0.5)
    occ = board(6, [(0, 0), (0, 3), (2, 5), (5, 1), (5, 5), (3, 3)])
    plan = RearrangementPipeline(time_model=time_model).plan(occ, spec)
    schedule = export_schedule(plan.log, spec, time_model, initial=occ)

    path = tmp_path / "schedule.json"
    write_schedule(schedule, path)
    loaded = read_schedule(path)

    assert replay_schedule(loaded) == plan.final
    assert tally(loaded.to_move_log()) == tally(plan.log)
    assert loaded.total_us == time_of(tally(plan.log), time_model)


def test_replay_needs_initial_board(time_model):
    spec = GridSpec(L=2, Lprime=4, p=0.5)
    schedule = export_schedule(MoveLog(), spec, time_model)
    with pytest.raises(ValueError):
        replay_schedule(schedule)


def test_total_is_sum_of_record_terms(board):
    """割り切れない t2 でも合計はレコードの時間項の和で time_of と一致する"""
    time_model = TimeModel(t1_us=37.3, spacing_um=2.0, speed_um_per_ms=130.0)
    spec = GridSpec(L=4, Lprime=8, p=0.5)
    occ = board(8, [(0, 1), (0, 3), (1, 6), (3, 0), (4, 7), (6, 2), (7, 5), (3, 3), (4, 4)])
    plan = RearrangementPipeline(time_model=time_model).plan(occ, spec)
    schedule = export_schedule(plan.log, spec, time_model)

    terms = [
        t
        for r in schedule.records
        for t in r.time_terms(time_model.t1_us, time_model.t2_us)
    ]
    expected = time_of(tally(plan.log), time_model)
    assert math.fsum(terms) == expected
    assert schedule.total_us == expected
    assert schedule.header["totals"]["total_us"] == expected
    durations = [r.duration_us for r in schedule.records]
    assert math.fsum(durations) == pytest.approx(expected, rel=1e-12)


def test_total_follows_records(time_model):
    """ヘッダーの値ではなくレコードから合計を求める"""
    spec = GridSpec(L=2, Lprime=4, p=0.5)
    log = MoveLog()
    op = log.new_op()
    log.capture("postprocess", op, [Site(0, 1)])
    log.travel("postprocess", op, 2, DOWN)
    log.release("postprocess", op, [Site(2, 1)])
    data = export_schedule(log, spec, time_model).to_dict()
    data["header"]["totals"]["total_us"] = -1.0
    assert ScheduleFile.from_dict(data).total_us == 100.0
