"""
シミュレータのメインエントリーポイント。
"""

import sys
from typing import Optional, Sequence

from dotenv import load_dotenv
from pydantic import ValidationError

from .cli import (
    EXIT_CONFIG,
    EXIT_OUTPUT,
    cli_fit,
    cli_render,
    cli_run,
    cli_schedule,
    cli_sweep,
    config_from_args,
    parse_args,
)
from .config import AppSettings, get_settings, update_settings
from .lattice import lprime_range
from .models.data_models import Parallelism, Protocol, TimeModel
from .utils import get_logger, setup_logging

logger = get_logger(__name__)


def dispatch(args) -> int:
    """サブコマンドを実行して終了ステータスを返す。"""
    settings = get_settings()

    if args.command in ("run", "sweep"):
        try:
            config = config_from_args(args)
        except (ValueError, ValidationError) as e:
            print(f"設定が不正です: {e}", file=sys.stderr)
            return EXIT_CONFIG
        except OSError as e:
            print(f"設定ファイルを読めません: {e}", file=sys.stderr)
            return EXIT_CONFIG

        if args.command == "run":
            return cli_run(config)
        if args.grid is not None:
            return cli_sweep(config, "N", args.grid)
        if args.lprime_range:
            return cli_sweep(config, "Lprime", lprime_range(config.L, config.p))
        return cli_sweep(config, "Lprime", args.lprime_grid)

    if args.command == "fit":
        return cli_fit(args.stats_csv, args.model, args.y)

    if args.command == "schedule":
        protocol = Protocol(
            variant=Parallelism(args.protocol),
            continuous_release=args.continuous_release,
        )
        time_model = TimeModel(
            t1_us=settings.timing.t1_us,
            spacing_um=settings.timing.spacing_um,
            speed_um_per_ms=settings.timing.speed_um_per_ms,
        )
        return cli_schedule(args.board, args.L, protocol, time_model, args.output)

    return cli_render(args.board, args.L)


def main(argv: Optional[Sequence[str]] = None) -> int:
    """環境変数を読み込み、ロギングを設定してサブコマンドを実行する。"""
    load_dotenv()
    # .env の値を反映する
    update_settings(**vars(AppSettings.from_env()))

    args = parse_args(argv)
    settings = get_settings()
    try:
        setup_logging(
            args.log_level or settings.logging.log_level,
            settings.logging.log_file,
            settings.logging.log_format,
        )
    except ValueError as e:
        print(e, file=sys.stderr)
        return EXIT_CONFIG
    except OSError as e:
        print(f"ログファイルを開けません: {e}", file=sys.stderr)
        return EXIT_OUTPUT

    return dispatch(args)


if __name__ == "__main__":
    sys.exit(main())
