"""
C, R, D の集計と時間モデルのテスト
"""
import pytest

from src.analysis.metrics import tally, time_of
from src.models.data_models import Metrics, TimeModel
from src.models.move_models import DOWN, RIGHT, MoveLog, Site


def _fill_move_log(length=2):
    log = MoveLog()
    op = log.new_op()
    log.capture("postprocess", op, [Site(0, 0)])
    log.travel("postprocess", op, length, DOWN)
    log.release("postprocess", op, [Site(length, 0)])
    return log


def test_empty_log():
    metrics = tally(MoveLog())
    assert (metrics.C, metrics.R, metrics.D, metrics.M) == (0, 0, 0, 0)


def test_single_fill_move():
    metrics = tally(_fill_move_log(2))
    assert (metrics.C_post, metrics.R_post, metrics.D_post) == (1, 1, 2)
    assert metrics.M == 1
    assert metrics.M_post == 1
    assert metrics.ops_post == 1


def test_events_not_atoms_are_counted():
    """3原子を1回で捕獲・解放しても C = R = 1"""
    log = MoveLog()
    op = log.new_op()
    sites = [Site(0, c) for c in range(3)]
    log.capture("compression", op, sites)
    log.travel("compression", op, 2, DOWN)
    log.release("compression", op, [Site(2, c) for c in range(3)])

    metrics = tally(log)
    assert (metrics.C_para, metrics.R_para, metrics.D_para) == (1, 1, 2)
    assert metrics.D_atoms == 6


def test_unramped_release_is_free():
    log = MoveLog()
    op = log.new_op()
    log.capture("compression", op, [Site(0, 0), Site(0, 1)])
    log.travel("compression", op, 1, DOWN)
    log.release("compression", op, [Site(1, 0)], ramped=False)
    log.travel("compression", op, 1, DOWN)
    log.release("compression", op, [Site(2, 1)])
    assert tally(log).R_para == 1


def test_stage_totals_add_up():
    log = _fill_move_log(3)
    other = MoveLog()
    op = other.new_op()
    other.capture("compression", op, [Site(1, 1)])
    other.travel("compression", op, 2, RIGHT)
    other.release("compression", op, [Site(1, 3)])
    metrics = tally(other + log)

    assert metrics.C == metrics.C_para + metrics.C_post == 2
    assert metrics.D == metrics.D_para + metrics.D_post == 5
    assert metrics.M == (metrics.C + metrics.R) / 2


def test_metrics_addition():
    a = Metrics(C_para=1, R_para=2, D_para=3)
    b = Metrics(C_post=4, R_post=4, D_post=5)
    total = a + b
    assert (total.C, total.R, total.D) == (5, 6, 8)


def test_time_model_derives_t2():
    tm = TimeModel(t1_us=15.0, spacing_um=2.0, speed_um_per_ms=75.0)
    assert tm.t2_us == pytest.approx(26.6666667)
    assert TimeModel.from_durations(30.0, 20.0).t2_us == pytest.approx(20.0)


@pytest.mark.parametrize("field", ["t1_us", "spacing_um", "speed_um_per_ms"])
def test_time_model_rejects_non_positive(field):
    with pytest.raises(ValueError):
        TimeModel(**{field: 0.0})


def test_time_of(time_model):
    metrics = tally(_fill_move_log(2))
    assert time_of(metrics, time_model) == pytest.approx(2 * 30.0 + 2 * 20.0)
    assert time_of(Metrics(), time_model) == 0.0


def test_travel_requires_steps():
    log = MoveLog()
    with pytest.raises(ValueError):
        log.travel("compression", 0, 0, DOWN)
