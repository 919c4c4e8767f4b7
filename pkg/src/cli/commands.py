"""
サブコマンドの実装（run / sweep / fit / schedule / render）。

各関数は終了ステータスを返す。設定エラーは 2、出力の書き込み失敗は 1。
試行の失敗（埋まらないターゲット）は終了ステータスに影響しない。
"""

import sys
from typing import List, Optional, Sequence

from pydantic import ValidationError

from ..analysis.ensemble import aggregate, run_trials, sweep_points
from ..analysis.fitting import fit_exp_decay, fit_linear_sqrt, fit_n32, fit_power_law
from ..export import (
    export_schedule,
    read_stats_csv,
    render_board,
    write_schedule,
    write_stats_csv,
    write_trials_csv,
)
from ..loading import load_stochastic, read_snapshot
from ..models.data_models import EnsembleStats, FitResult, GridSpec, Protocol, TimeModel
from ..models.run_config import RunConfig
from ..pipeline.error_handler import ConfigError, log_error
from ..pipeline.pipeline import RearrangementPipeline
from ..utils import get_logger

logger = get_logger(__name__)

EXIT_OK = 0
EXIT_OUTPUT = 1
EXIT_CONFIG = 2


def _fmt(stats: EnsembleStats, name: str, with_std: bool = True) -> str:
    if name not in stats.quantities:
        return "nan"
    q = stats.quantities[name]
    return f"{q.mean:.2f}±{q.std:.2f}" if with_std else f"{q.mean:.1f}"


def format_summary(stats: EnsembleStats) -> str:
    """1行サマリー: N, M 平均±標準偏差, D 平均±標準偏差, T 平均, 失敗率。"""
    return (
        f"N={stats.N} L'={stats.Lprime} r={stats.r:.3f} protocol={stats.protocol} "
        f"M={_fmt(stats, 'M')} D={_fmt(stats, 'D')} "
        f"T_us={_fmt(stats, 'T_us', with_std=False)} "
        f"failure_rate={stats.failure_rate:.4f}"
    )


def cli_run(config: RunConfig) -> int:
    """
    1条件のアンサンブルを実行し、試行CSV・統計CSV・（任意で）スケジュールを書き出す。
    """
    spec = config.to_spec()
    protocol = config.to_protocol()
    time_model = config.to_time_model()
    logger.info(
        f"run: N={spec.N} L'={spec.Lprime} p={spec.p} {protocol.label} "
        f"trials={config.n_trials} seed={config.base_seed}"
    )

    trials = run_trials(
        spec,
        protocol,
        config.n_trials,
        config.base_seed,
        time_model=time_model,
        workers=config.workers,
        timing=config.timing,
    )
    stats = aggregate(trials, spec, protocol)

    try:
        write_trials_csv(trials, config.output_path(config.trial_csv))
        write_stats_csv([stats], config.output_path(config.stats_csv))
        if config.schedule_json:
            _write_first_schedule(config, spec, protocol, time_model)
    except OSError as e:
        log_error(e, "cli_run")
        print(f"出力を書き込めません: {e}", file=sys.stderr)
        return EXIT_OUTPUT

    print(format_summary(stats))
    return EXIT_OK


def _write_first_schedule(
    config: RunConfig, spec: GridSpec, protocol: Protocol, time_model: TimeModel
) -> None:
    """最初のシードの試行を再計画してスケジュールを書き出す。"""
    occ = load_stochastic(spec, config.base_seed)
    plan = RearrangementPipeline(protocol, time_model).plan(occ, spec)
    schedule = export_schedule(plan.log, spec, time_model, initial=occ)
    write_schedule(schedule, config.output_path(config.schedule_json))


def sweep_fits(rows: Sequence[EnsembleStats], variable: str) -> List[FitResult]:
    """スイープ結果にスケーリング則をフィットする（点が足りないものは省く）。"""
    fits: List[FitResult] = []

    def points(x_attr: str, quantity: str, positive: bool = False):
        pts = []
        for row in rows:
            if quantity not in row.quantities:
                continue
            y = row.mean(quantity)
            if positive and y <= 0:
                logger.warning(
                    f"{quantity} が 0 以下の点 ({x_attr}={getattr(row, x_attr)}) を除外します"
                )
                continue
            pts.append((float(getattr(row, x_attr)), y))
        return pts

    def attempt(fitter, pts, **kwargs):
        if len({x for x, _ in pts}) < 2:
            logger.warning(f"{kwargs.get('y')}: フィットに必要な点が足りません")
            return
        fits.append(fitter(pts, **kwargs))

    if variable == "N":
        attempt(fit_linear_sqrt, points("N", "M"), y="M_mean")
        attempt(fit_power_law, points("N", "D_post", True), x="N", y="D_post_mean")
        attempt(fit_power_law, points("N", "R_para", True), x="N", y="R_para_mean")
        attempt(fit_n32, points("N", "D_post", True), y="D_post_mean")
    else:
        attempt(fit_exp_decay, points("r", "M_post", True), y="M_post_mean")
        attempt(fit_exp_decay, points("r", "D_post", True), y="D_post_mean")

    for fit in fits:
        logger.info(fit.to_footer())
    return fits


def cli_sweep(config: RunConfig, variable: str, grid: Sequence[int]) -> int:
    """グリッドの各点でアンサンブルを実行し、統計CSVにフィット結果を付けて書き出す。"""
    try:
        points = sweep_points(config, variable, grid)
    except (ValueError, ValidationError) as e:
        print(f"スイープ設定が不正です: {e}", file=sys.stderr)
        return EXIT_CONFIG

    all_trials = []
    rows = []
    for point in points:
        spec = point.to_spec()
        protocol = point.to_protocol()
        trials = run_trials(
            spec,
            protocol,
            point.n_trials,
            point.base_seed,
            time_model=point.to_time_model(),
            workers=point.workers,
            timing=point.timing,
        )
        stats = aggregate(trials, spec, protocol)
        logger.info(format_summary(stats))
        all_trials.extend(trials)
        rows.append(stats)

    fits = sweep_fits(rows, variable)
    try:
        write_trials_csv(all_trials, config.output_path(config.trial_csv))
        write_stats_csv(rows, config.output_path(config.stats_csv), fits)
    except OSError as e:
        log_error(e, "cli_sweep")
        print(f"出力を書き込めません: {e}", file=sys.stderr)
        return EXIT_OUTPUT

    for row in rows:
        print(format_summary(row))
    for fit in fits:
        print(fit.to_footer())
    return EXIT_OK


_FITTERS = {
    "linear_sqrt": ("N", fit_linear_sqrt),
    "power_3_2": ("N", fit_n32),
    "power_law": ("N", fit_power_law),
    "exp_decay": ("r", fit_exp_decay),
}


def cli_fit(stats_csv: str, model: str, y: str) -> int:
    """保存済みの統計CSVを再フィットしてフッター行を表示する。"""
    if model not in _FITTERS:
        print(f"不明なモデルです: {model}", file=sys.stderr)
        return EXIT_CONFIG
    try:
        frame = read_stats_csv(stats_csv)
    except OSError as e:
        print(f"統計CSVを読めません: {e}", file=sys.stderr)
        return EXIT_OUTPUT

    x_col, fitter = _FITTERS[model]
    if y not in frame.columns or x_col not in frame.columns:
        print(f"列 {x_col!r} または {y!r} がありません", file=sys.stderr)
        return EXIT_CONFIG

    data = frame[[x_col, y]].dropna()
    pts = [(float(a), float(b)) for a, b in data.itertuples(index=False)]
    try:
        if model == "power_law":
            fit = fitter(pts, x=x_col, y=y)
        else:
            fit = fitter(pts, y=y)
    except ValueError as e:
        print(f"フィットできません: {e}", file=sys.stderr)
        return EXIT_CONFIG

    print(fit.to_footer())
    return EXIT_OK


def _board_spec(board_path: str, L: Optional[int]) -> tuple:
    occ = read_snapshot(board_path)
    if occ.height != occ.width:
        raise ConfigError(f"盤面は正方形が必要です: {occ.height}x{occ.width}")
    size = occ.height
    target = L if L is not None else size
    # p は盤面の実際の充填率（ジオメトリには影響しない）
    p = occ.atom_count / (size * size)
    return occ, GridSpec(L=target, Lprime=size, p=p)


def cli_schedule(
    board_path: str,
    L: Optional[int],
    protocol: Protocol,
    time_model: TimeModel,
    output: str,
) -> int:
    """盤面ファイルを計画し、スケジュールJSONを書き出す。"""
    try:
        occ, spec = _board_spec(board_path, L)
    except (ValueError, OSError) as e:
        print(f"盤面を読み込めません: {e}", file=sys.stderr)
        return EXIT_CONFIG

    plan = RearrangementPipeline(protocol, time_model).plan(occ, spec)
    schedule = export_schedule(plan.log, spec, time_model, initial=occ)
    try:
        write_schedule(schedule, output)
    except OSError as e:
        log_error(e, "cli_schedule")
        print(f"出力を書き込めません: {e}", file=sys.stderr)
        return EXIT_OUTPUT

    totals = schedule.header["totals"]
    print(
        f"records={len(schedule.records)} C={totals['C']} R={totals['R']} "
        f"D={totals['D']} T_us={totals['total_us']:.1f} unfilled={len(plan.unfilled)}"
    )
    return EXIT_OK


def cli_render(board_path: str, L: Optional[int]) -> int:
    """盤面ファイルをテキストで表示する。"""
    try:
        occ, spec = _board_spec(board_path, L)
    except (ValueError, OSError) as e:
        print(f"盤面を読み込めません: {e}", file=sys.stderr)
        return EXIT_CONFIG
    print(render_board(occ, spec))
    return EXIT_OK

