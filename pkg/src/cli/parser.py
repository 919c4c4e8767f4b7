"""
コマンドライン引数の定義と RunConfig の組み立て。

値の優先順位は 設定の既定値 < 設定ファイル (--config) < フラグ。
フラグは既定値を持たず（argparse.SUPPRESS）、指定されたものだけが上書きする。
"""

import argparse
from typing import Any, Dict, List, Optional, Sequence

from ..config import get_settings
from ..models.data_models import Parallelism, ReservoirMode
from ..models.run_config import RunConfig

# フラグの dest のうち RunConfig のフィールドでないもの
_NON_CONFIG_KEYS = {
    "command",
    "config",
    "log_level",
    "grid",
    "lprime_grid",
    "lprime_range",
}


def _int_list(text: str) -> List[int]:
    try:
        return [int(v) for v in text.replace(" ", "").split(",") if v]
    except ValueError:
        raise argparse.ArgumentTypeError(f"整数のカンマ区切りが必要です: {text!r}")


def _add_config_flags(parser: argparse.ArgumentParser) -> None:
    """run / sweep 共通のフラグ。dest は RunConfig のフィールド名と一致させる。"""
    s = argparse.SUPPRESS
    parser.add_argument("--config", default=s, help="key=value 形式の設定ファイル")
    parser.add_argument("--L", dest="L", type=int, default=s, help="ターゲットの一辺")
    parser.add_argument("--p", dest="p", type=float, default=s, help="充填率")
    parser.add_argument(
        "--reservoir",
        choices=[m.value for m in ReservoirMode],
        default=s,
        help="L' の決め方",
    )
    parser.add_argument(
        "--lprime", type=int, default=s, help="L' を直接指定する（explicit モード）"
    )
    parser.add_argument(
        "--protocol",
        choices=[v.value for v in Parallelism],
        default=s,
        help="並列度",
    )
    parser.add_argument(
        "--continuous-release",
        dest="continuous_release",
        action="store_true",
        default=s,
        help="1転送あたりのランプ付きリリースを1回として数える",
    )
    parser.add_argument("--trials", dest="n_trials", type=int, default=s)
    parser.add_argument("--seed", dest="base_seed", type=int, default=s)
    parser.add_argument("--t1", dest="t1_us", type=float, default=s, help="t1 [us]")
    parser.add_argument("--spacing", dest="spacing_um", type=float, default=s)
    parser.add_argument("--speed", dest="speed_um_per_ms", type=float, default=s)
    parser.add_argument("--workers", type=int, default=s)
    parser.add_argument(
        "--no-timing",
        dest="timing",
        action="store_false",
        default=s,
        help="計画時間を計測せず 0 を書く（CSV をバイト単位で再現可能にする）",
    )
    parser.add_argument("--output-dir", dest="output_dir", default=s)
    parser.add_argument("--trial-csv", dest="trial_csv", default=s)
    parser.add_argument("--stats-csv", dest="stats_csv", default=s)
    parser.add_argument("--schedule", dest="schedule_json", default=s)


def _add_board_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("board", help="盤面ファイル（'1'/'0' の行）")
    parser.add_argument(
        "--L", dest="L", type=int, default=None, help="ターゲットの一辺（省略時は盤面全体）"
    )


def build_parser() -> argparse.ArgumentParser:
    """サブコマンド run / sweep / fit / schedule / render を持つパーサーを作る。"""
    parser = argparse.ArgumentParser(
        prog="pca-sim", description="並列圧縮アルゴリズムによる原子配列再配置シミュレータ"
    )
    parser.add_argument("--log-level", dest="log_level", default=None)
    sub = parser.add_subparsers(dest="command", required=True)

    run = sub.add_parser("run", help="1条件のアンサンブルを実行する")
    _add_config_flags(run)

    sweep = sub.add_parser("sweep", help="N または L' のグリッドでスイープする")
    _add_config_flags(sweep)
    group = sweep.add_mutually_exclusive_group(required=True)
    group.add_argument("--grid", type=_int_list, help="N のカンマ区切り（平方数）")
    group.add_argument("--lprime-grid", dest="lprime_grid", type=_int_list)
    group.add_argument(
        "--lprime-range",
        dest="lprime_range",
        action="store_true",
        help="L' を default から saturated まで全て走査する",
    )

    fit = sub.add_parser("fit", help="統計CSVを再フィットする")
    fit.add_argument("stats_csv")
    fit.add_argument(
        "--model",
        choices=["linear_sqrt", "power_3_2", "power_law", "exp_decay"],
        default="linear_sqrt",
    )
    fit.add_argument("--y", default="M_mean", help="フィットする列名")

    schedule = sub.add_parser("schedule", help="盤面ファイルからスケジュールを作る")
    _add_board_flags(schedule)
    schedule.add_argument(
        "--protocol", choices=[v.value for v in Parallelism], default="full"
    )
    schedule.add_argument("--continuous-release", action="store_true")
    schedule.add_argument("--output", "-o", default="schedule.json")

    render = sub.add_parser("render", help="盤面ファイルを表示する")
    _add_board_flags(render)

    return parser


def base_values() -> Dict[str, Any]:
    """アプリケーション設定から RunConfig の既定値を作る。"""
    s = get_settings()
    return {
        "p": s.simulation.filling_fraction,
        "n_trials": s.simulation.default_trials,
        "base_seed": s.simulation.base_seed,
        "workers": s.simulation.workers,
        "t1_us": s.timing.t1_us,
        "spacing_um": s.timing.spacing_um,
        "speed_um_per_ms": s.timing.speed_um_per_ms,
        "output_dir": s.output.output_dir,
        "trial_csv": s.output.trial_csv,
        "stats_csv": s.output.stats_csv,
    }


def config_from_args(args: argparse.Namespace) -> RunConfig:
    """
    引数から RunConfig を組み立てる。

    Raises:
        ValueError: 未知のキー、または make_spec の事前条件を満たさない場合
            （pydantic の ValidationError を含む）
    """
    flags = {k: v for k, v in vars(args).items() if k not in _NON_CONFIG_KEYS}
    if "lprime" in flags:
        flags["reservoir"] = ReservoirMode.EXPLICIT

    values = base_values()
    config_path: Optional[str] = getattr(args, "config", None)
    if config_path:
        file_config = RunConfig.from_file(config_path)
        values.update(file_config.model_dump(exclude_unset=True))
    return RunConfig.from_values(values, flags)


def parse_args(argv: Optional[Sequence[str]] = None) -> argparse.Namespace:
    return build_parser().parse_args(argv)
