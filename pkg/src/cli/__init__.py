"""
コマンドラインインターフェース。
"""

from .commands import (
    EXIT_CONFIG,
    EXIT_OK,
    EXIT_OUTPUT,
    cli_fit,
    cli_render,
    cli_run,
    cli_schedule,
    cli_sweep,
    format_summary,
    sweep_fits,
)
from .parser import build_parser, config_from_args, parse_args

__all__ = [
    "EXIT_CONFIG",
    "EXIT_OK",
    "EXIT_OUTPUT",
    "cli_fit",
    "cli_render",
    "cli_run",
    "cli_schedule",
    "cli_sweep",
    "format_summary",
    "sweep_fits",
    "build_parser",
    "config_from_args",
    "parse_args",
]
