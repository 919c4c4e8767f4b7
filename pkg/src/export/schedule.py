"""
移動スケジュールの書き出しと再生。

スケジュールは MoveLog の各イベントを1レコードにしたJSONで、各レコードに
T = (C + R) t1 + D t2 の内訳となる所要時間を付ける。合計時間はレコードの
時間項 (t1 と1歩ごとの t2) を math.fsum で足したもので、time_of と同じ項の和になる。
"""

import json
import math
from dataclasses import asdict, dataclass, field
from pathlib import Path
from typing import Any, Dict, List, Optional, Union

from ..analysis.metrics import tally
from ..loading.occupancy import Occupancy
from ..models.data_models import GridSpec, TimeModel
from ..models.move_models import MoveLog, Site
from ..pipeline.replay import replay_log

_EVENT_NAMES = {"capture": "capture", "travel": "sweep", "release": "release"}
_EVENT_KINDS = {v: k for k, v in _EVENT_NAMES.items()}


@dataclass
class ScheduleRecord:
    """スケジュールの1レコード。"""

    op_index: int
    stage: str
    event: str  # capture | sweep | release
    sites: List[List[int]] = field(default_factory=list)
    tones: int = 0  # イベント後にバスが保持している原子数
    steps: int = 0
    direction: Optional[List[int]] = None
    ramped: bool = True
    duration_us: float = 0.0

    def __post_init__(self):
        """値の検証を行います。"""
        if self.event not in _EVENT_KINDS:
            raise ValueError(f"不明なイベントです: {self.event}")
        if self.duration_us < 0:
            raise ValueError(f"所要時間は0以上が必要です: {self.duration_us}")

    def time_terms(self, t1_us: float, t2_us: float) -> List[float]:
        """T の和に入る項。capture とランプ付き release は t1、sweep は1歩ごとに t2。"""
        if self.event == "sweep":
            return [t2_us] * self.steps
        if self.event == "release" and not self.ramped:
            return []
        return [t1_us]

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)


@dataclass
class ScheduleFile:
    """ヘッダー（グリッド、ターゲット、時間モデル、合計）とレコード列。"""

    header: Dict[str, Any]
    records: List[ScheduleRecord] = field(default_factory=list)

    @property
    def total_us(self) -> float:
        """レコードの時間項から求めた総時間 [μs]。"""
        tm = self.header["time_model"]
        return _sum_terms(self.records, tm["t1_us"], tm["t2_us"])

    def to_dict(self) -> Dict[str, Any]:
        return {
            "header": self.header,
            "records": [r.to_dict() for r in self.records],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, ensure_ascii=False)

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "ScheduleFile":
        return cls(
            header=data["header"],
            records=[ScheduleRecord(**r) for r in data.get("records", [])],
        )

    def to_move_log(self) -> MoveLog:
        """レコードから MoveLog を復元する。"""
        log = MoveLog()
        for rec in self.records:
            sites = [Site(r, c) for r, c in rec.sites]
            kind = _EVENT_KINDS[rec.event]
            if kind == "capture":
                log.capture(rec.stage, rec.op_index, sites)
            elif kind == "travel":
                log.travel(rec.stage, rec.op_index, rec.steps, tuple(rec.direction))
            else:
                log.release(rec.stage, rec.op_index, sites, ramped=rec.ramped)
            log.n_ops = max(log.n_ops, rec.op_index + 1)
        return log

    def initial_board(self) -> Optional[Occupancy]:
        text = self.header.get("initial_board")
        return Occupancy.from_text(text) if text else None


def _sum_terms(records: List[ScheduleRecord], t1_us: float, t2_us: float) -> float:
    return math.fsum(t for rec in records for t in rec.time_terms(t1_us, t2_us))


def export_schedule(
    log: MoveLog,
    spec: GridSpec,
    time_model: TimeModel,
    initial: Optional[Occupancy] = None,
) -> ScheduleFile:
    """
    MoveLog をスケジュールに変換する。

    capture とランプを伴う release は t1、sweep は steps·t2。ヘッダーの合計時間は
    レコードの時間項の和で、time_of(tally(log)) と一致する。

    Args:
        log: 完了した MoveLog
        spec: グリッド定義
        time_model: 時間モデル
        initial: 再生用にヘッダーへ埋め込む初期盤面

    Returns:
        スケジュール
    """
    metrics = tally(log)
    t1, t2 = time_model.t1_us, time_model.t2_us
    header: Dict[str, Any] = {
        "grid": {"height": spec.Lprime, "width": spec.Lprime},
        "target": {"row": spec.offset, "col": spec.offset, "size": spec.L},
        "time_model": time_model.model_dump(),
        "totals": {
            "C": metrics.C,
            "R": metrics.R,
            "D": metrics.D,
        },
    }
    if initial is not None:
        header["initial_board"] = initial.to_text()

    records = []
    held = 0
    for event in log:
        if event.kind == "capture":
            held += event.n_atoms
        elif event.kind == "release":
            held -= event.n_atoms
        record = ScheduleRecord(
            op_index=event.op_id,
            stage=event.stage,
            event=_EVENT_NAMES[event.kind],
            sites=[[s.row, s.col] for s in event.sites],
            tones=held,
            steps=event.steps,
            direction=list(event.direction) if event.direction else None,
            ramped=event.ramped,
        )
        record.duration_us = math.fsum(record.time_terms(t1, t2))
        records.append(record)

    header["totals"]["total_us"] = _sum_terms(records, t1, t2)
    return ScheduleFile(header=header, records=records)


def write_schedule(schedule: ScheduleFile, path: Union[str, Path]) -> None:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(schedule.to_json(), encoding="utf-8")


def read_schedule(path: Union[str, Path]) -> ScheduleFile:
    return ScheduleFile.from_dict(json.loads(Path(path).read_text(encoding="utf-8")))


def replay_schedule(
    schedule: ScheduleFile, initial: Optional[Occupancy] = None
) -> Occupancy:
    """
    スケジュールを初期盤面に適用して最終盤面を返す。

    Raises:
        ValueError: 初期盤面が与えられず、ヘッダーにも含まれていない場合
        CollisionError: 再生中に衝突が起きた場合
    """
    board = initial if initial is not None else schedule.initial_board()
    if board is None:
        raise ValueError("再生には初期盤面が必要です")
    return replay_log(schedule.to_move_log(), board)
