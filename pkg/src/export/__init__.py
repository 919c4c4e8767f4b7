from .board import render_board
from .csv_writer import read_stats_csv, write_stats_csv, write_trials_csv
from .schedule import (
    ScheduleFile,
    ScheduleRecord,
    export_schedule,
    read_schedule,
    replay_schedule,
    write_schedule,
)

__all__ = [
    "render_board",
    "read_stats_csv",
    "write_stats_csv",
    "write_trials_csv",
    "ScheduleFile",
    "ScheduleRecord",
    "export_schedule",
    "read_schedule",
    "replay_schedule",
    "write_schedule",
]
