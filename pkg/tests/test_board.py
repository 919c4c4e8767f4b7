"""
盤面のテキスト表示のテスト
"""
from src.export import render_board
from src.loading import Occupancy
from src.models.data_models import GridSpec
from src.models.move_models import Site


def test_single_filled_trap():
    assert render_board(Occupancy.full(1)) == "●"


def test_empty_two_by_two():
    assert render_board(Occupancy.empty(2)) == "○○\n○○"


def test_hand_trace_golden(hand_trace_board, hand_trace_spec, data_dir):
    golden = (data_dir / "board_6x6_render.txt").read_text(encoding="utf-8")
    assert render_board(hand_trace_board, hand_trace_spec) == golden


def test_target_region_bracketed():
    spec = GridSpec(L=2, Lprime=4, p=0.5)
    occ = Occupancy.empty(4)
    occ.set(Site(1, 1), True)
    assert render_board(occ, spec).splitlines() == [
        "○ ○○ ○",
        "○[●○]○",
        "○[○○]○",
        "○ ○○ ○",
    ]
