"""
Planning and event models used on the hot path of a trial.

These are slotted dataclasses rather than pydantic models: a single trial
creates thousands of them.
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import Iterator, List, Literal, NamedTuple, Optional, Tuple


class Site(NamedTuple):
    """A trap position in units of the trap spacing."""

    row: int
    col: int

    def manhattan(self, other: "Site") -> int:
        return abs(self.row - other.row) + abs(self.col - other.col)


Direction = Tuple[int, int]

UP: Direction = (-1, 0)
LEFT: Direction = (0, -1)
DOWN: Direction = (1, 0)
RIGHT: Direction = (0, 1)


class Side(str, Enum):
    """Layer sides in counterclockwise processing order."""

    TOP = "top"
    LEFT = "left"
    BOTTOM = "bottom"
    RIGHT = "right"

    @property
    def inward(self) -> Direction:
        """Direction pointing from this side toward the target center."""
        return _INWARD[self]


_INWARD = {Side.TOP: DOWN, Side.LEFT: RIGHT, Side.BOTTOM: UP, Side.RIGHT: LEFT}

Stage = Literal["compression", "postprocess"]


class Segment(NamedTuple):
    direction: Direction
    steps: int


@dataclass(frozen=True, slots=True)
class Path:
    """Unit-step lattice path; consecutive waypoints differ in exactly one axis."""

    waypoints: Tuple[Site, ...]

    def __post_init__(self):
        if len(self.waypoints) < 2:
            raise ValueError("A path needs at least two waypoints")
        for a, b in zip(self.waypoints, self.waypoints[1:]):
            if abs(a.row - b.row) + abs(a.col - b.col) != 1:
                raise ValueError(f"Non-adjacent waypoints {a} -> {b}")

    @property
    def source(self) -> Site:
        return self.waypoints[0]

    @property
    def dest(self) -> Site:
        return self.waypoints[-1]

    @property
    def length(self) -> int:
        return len(self.waypoints) - 1

    @property
    def segments(self) -> Tuple[Segment, ...]:
        """Run-length encoding of the path into straight runs."""
        runs: List[Segment] = []
        for a, b in zip(self.waypoints, self.waypoints[1:]):
            d = (b.row - a.row, b.col - a.col)
            if runs and runs[-1].direction == d:
                runs[-1] = Segment(d, runs[-1].steps + 1)
            else:
                runs.append(Segment(d, 1))
        return tuple(runs)


@dataclass(frozen=True, slots=True)
class Assignment:
    """A straight inward move of one movable atom to a target trap."""

    source: Site
    dest: Site

    @property
    def length(self) -> int:
        return self.source.manhattan(self.dest)


@dataclass(frozen=True, slots=True)
class TransferOp:
    """One shuttle-bus transfer: a single capture, stops at each distinct length."""

    layer: int
    side: Side
    assignments: Tuple[Assignment, ...]

    def __post_init__(self):
        if not self.assignments:
            raise ValueError("TransferOp needs at least one assignment")

    @property
    def direction(self) -> Direction:
        return self.side.inward

    @property
    def distinct_lengths(self) -> Tuple[int, ...]:
        return tuple(sorted({a.length for a in self.assignments}))

    @property
    def bus_distance(self) -> int:
        return max(a.length for a in self.assignments)

    @property
    def captures(self) -> int:
        return 1

    def releases(self, continuous: bool = False) -> int:
        return 1 if continuous else len(self.distinct_lengths)


@dataclass(frozen=True, slots=True)
class FillMove:
    """A single-tweezer postprocess move into a target vacancy."""

    source: Site
    dest: Site
    path: Path

    @property
    def length(self) -> int:
        return self.path.length


EventKind = Literal["capture", "travel", "release"]


@dataclass(frozen=True, slots=True)
class MoveEvent:
    """
    One entry of the move log.

    capture/release carry the sites of the atoms involved; travel carries the
    number of unit steps and the direction every held atom moves. A release
    with ``ramped=False`` drops atoms without stopping the bus (continuous
    release) and costs no ramp time.
    """

    kind: EventKind
    stage: Stage
    op_id: int
    sites: Tuple[Site, ...] = ()
    steps: int = 0
    direction: Optional[Direction] = None
    ramped: bool = True

    def __post_init__(self):
        if self.kind == "travel" and (self.steps < 1 or self.direction is None):
            raise ValueError("Travel events need steps >= 1 and a direction")
        if self.kind != "travel" and not self.sites:
            raise ValueError(f"{self.kind} events need at least one site")

    @property
    def n_atoms(self) -> int:
        return len(self.sites)


@dataclass(slots=True)
class MoveLog:
    """Ordered event stream of a trial; op ids are dense and start at 0."""

    events: List[MoveEvent] = field(default_factory=list)
    n_ops: int = 0

    def new_op(self) -> int:
        op_id = self.n_ops
        self.n_ops += 1
        return op_id

    def capture(self, stage: Stage, op_id: int, sites) -> None:
        self.events.append(MoveEvent("capture", stage, op_id, tuple(sites)))

    def travel(self, stage: Stage, op_id: int, steps: int, direction) -> None:
        self.events.append(
            MoveEvent("travel", stage, op_id, steps=steps, direction=direction)
        )

    def release(self, stage: Stage, op_id: int, sites, ramped: bool = True) -> None:
        self.events.append(
            MoveEvent("release", stage, op_id, tuple(sites), ramped=ramped)
        )

    def extend(self, other: "MoveLog") -> "MoveLog":
        """Append another log, shifting its op ids past ours."""
        shift = self.n_ops
        for e in other.events:
            self.events.append(
                MoveEvent(
                    e.kind,
                    e.stage,
                    e.op_id + shift,
                    e.sites,
                    e.steps,
                    e.direction,
                    e.ramped,
                )
            )
        self.n_ops += other.n_ops
        return self

    def __add__(self, other: "MoveLog") -> "MoveLog":
        merged = MoveLog(list(self.events), self.n_ops)
        return merged.extend(other)

    def __iter__(self) -> Iterator[MoveEvent]:
        return iter(self.events)

    def __len__(self) -> int:
        return len(self.events)
