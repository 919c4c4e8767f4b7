"""
トラップの占有状態。
"""

from pathlib import Path
from typing import Optional, Union

import numpy as np

from ..models.move_models import Site


class Occupancy:
    """
    トラップの充填状態を持つ密な真偽値グリッド。

    属性:
        filled: shape (height, width) の bool 配列
    """

    __slots__ = ("filled",)

    def __init__(self, filled: np.ndarray):
        filled = np.array(filled, dtype=bool)
        if filled.ndim != 2:
            raise ValueError(f"占有グリッドは2次元が必要です: shape={filled.shape}")
        self.filled = filled

    @classmethod
    def empty(cls, height: int, width: Optional[int] = None) -> "Occupancy":
        return cls(np.zeros((height, width or height), dtype=bool))

    @classmethod
    def full(cls, height: int, width: Optional[int] = None) -> "Occupancy":
        return cls(np.ones((height, width or height), dtype=bool))

    @property
    def height(self) -> int:
        return self.filled.shape[0]

    @property
    def width(self) -> int:
        return self.filled.shape[1]

    @property
    def atom_count(self) -> int:
        return int(self.filled.sum())

    def contains(self, site: Site) -> bool:
        return 0 <= site.row < self.height and 0 <= site.col < self.width

    def is_filled(self, site: Site) -> bool:
        return bool(self.filled[site.row, site.col])

    def set(self, site: Site, value: bool) -> None:
        self.filled[site.row, site.col] = value

    def copy(self) -> "Occupancy":
        return Occupancy(self.filled.copy())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Occupancy):
            return NotImplemented
        return self.filled.shape == other.filled.shape and bool(
            np.array_equal(self.filled, other.filled)
        )

    def __repr__(self) -> str:
        return f"Occupancy({self.height}x{self.width}, atoms={self.atom_count})"

    def to_text(self) -> str:
        """1行1列の '1'/'0' テキスト（スナップショット形式）。"""
        return "".join(
            "".join("1" if v else "0" for v in row) + "\n" for row in self.filled
        )

    @classmethod
    def from_text(cls, text: str) -> "Occupancy":
        rows = [line.strip() for line in text.splitlines() if line.strip()]
        if not rows:
            raise ValueError("スナップショットが空です")
        width = len(rows[0])
        for i, row in enumerate(rows):
            if len(row) != width:
                raise ValueError(f"{i}行目の長さが {len(row)} で、{width} と一致しません")
            if set(row) - {"0", "1"}:
                raise ValueError(f"{i}行目に '0'/'1' 以外の文字があります: {row!r}")
        return cls(np.array([[c == "1" for c in row] for row in rows], dtype=bool))


def read_snapshot(path: Union[str, Path]) -> Occupancy:
    """スナップショットファイルを読み込む。"""
    return Occupancy.from_text(Path(path).read_text(encoding="utf-8"))


def write_snapshot(occ: Occupancy, path: Union[str, Path]) -> None:
    """スナップショットファイルを書き出す。"""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(occ.to_text(), encoding="utf-8")
