"""
格子の幾何モジュール。

ターゲット領域と、ターゲット中心に同心の正方形レイヤー（内側から 0, 1, 2, ...）
を扱う。座標は中心の2倍 (center2) を使って整数演算のみで計算するため、
L の偶奇どちらでも同じ式が使える。
"""

import math
from dataclasses import dataclass
from typing import Iterator, List, Optional, Tuple, Union

import numpy as np

from ..models.data_models import GridSpec, ReservoirMode
from ..models.move_models import Side, Site


@dataclass(frozen=True)
class LayerRing:
    """レイヤー k の4辺（top → left → bottom → right の反時計回り順）。"""

    k: int
    top: Tuple[Site, ...]
    left: Tuple[Site, ...]
    bottom: Tuple[Site, ...]
    right: Tuple[Site, ...]

    def sides(self) -> Iterator[Tuple[Side, Tuple[Site, ...]]]:
        yield Side.TOP, self.top
        yield Side.LEFT, self.left
        yield Side.BOTTOM, self.bottom
        yield Side.RIGHT, self.right

    def side(self, side: Side) -> Tuple[Site, ...]:
        return getattr(self, side.value)

    def sites(self) -> List[Site]:
        return [s for _, seq in self.sides() for s in seq]

    def __len__(self) -> int:
        return sum(len(seq) for _, seq in self.sides())


def make_spec(
    L: int,
    p: float,
    reservoir_mode: Union[ReservoirMode, str] = ReservoirMode.DEFAULT,
    lprime: Optional[int] = None,
) -> GridSpec:
    """
    ターゲットサイズと充填率から GridSpec を作る。

    Args:
        L: ターゲットの一辺（N = L^2）
        p: 充填率 (0, 1]
        reservoir_mode: default は L' = ceil(L/sqrt(p) + 1)、
            saturated は L' = ceil(sqrt(3/p) L)、explicit は lprime を使う
        lprime: explicit モードでの L'

    Returns:
        オフセット floor((L'-L)/2) でターゲットを中央に置いた GridSpec

    Raises:
        ValueError: p = 0、L < 1、または L' < L の場合
    """
    mode = ReservoirMode(reservoir_mode)
    if L < 1:
        raise ValueError(f"L は1以上が必要です: {L}")
    if not 0.0 < p <= 1.0:
        raise ValueError(f"充填率 p は (0, 1] の範囲が必要です: {p}")

    if mode == ReservoirMode.EXPLICIT:
        if lprime is None:
            raise ValueError("explicit モードでは lprime の指定が必要です")
        if lprime < L:
            raise ValueError(f"lprime ({lprime}) は L ({L}) 以上が必要です")
        size = lprime
    elif mode == ReservoirMode.SATURATED:
        size = math.ceil(math.sqrt(3.0 / p) * L)
    else:
        size = math.ceil(L / math.sqrt(p) + 1)

    return GridSpec(L=L, Lprime=size, p=p)


def lprime_range(L: int, p: float) -> List[int]:
    """default から saturated までの L' を全て列挙する。"""
    lo = make_spec(L, p, ReservoirMode.DEFAULT).Lprime
    hi = make_spec(L, p, ReservoirMode.SATURATED).Lprime
    return list(range(lo, max(lo, hi) + 1))


def layer_of(site: Site, spec: GridSpec) -> int:
    """サイトのレイヤー番号（ターゲット中心からのチェビシェフ距離）。"""
    c2 = spec.center2
    return max(abs(2 * site.row - c2), abs(2 * site.col - c2)) // 2


def layer_bounds(k: int, spec: GridSpec) -> Tuple[int, int]:
    """レイヤー k 以内の正方形の [lo, hi]（グリッドでクリップしない）。"""
    c2 = spec.center2
    return (c2 - 2 * k) // 2, (c2 + 2 * k + 1) // 2


def layer_grid(spec: GridSpec) -> np.ndarray:
    """全サイトのレイヤー番号を並べた配列。"""
    idx = np.arange(spec.Lprime)
    d = np.abs(2 * idx - spec.center2)
    return np.maximum(d[:, None], d[None, :]) // 2


def inward_steps(spec: GridSpec) -> Tuple[np.ndarray, np.ndarray]:
    """
    各サイトからターゲット中心へ向かう1歩 (drow, dcol)。

    対角線 |2r - c2| == |2c - c2| はグリッドを上下左右の4象限に分ける。
    上下の象限のサイトは列に沿って、左右の象限のサイトは行に沿って中心へ
    進む。対角線上のサイトは (0, 0)。
    """
    d = 2 * np.arange(spec.Lprime) - spec.center2
    rows, cols = d[:, None], d[None, :]
    vertical = np.abs(rows) > np.abs(cols)
    horizontal = np.abs(cols) > np.abs(rows)
    drow = np.where(vertical, -np.sign(rows), 0).astype(np.intp)
    dcol = np.where(horizontal, -np.sign(cols), 0).astype(np.intp)
    return drow, dcol


def max_layer(spec: GridSpec) -> int:
    """グリッドと交わる最大のレイヤー番号。"""
    last = spec.Lprime - 1
    return max(layer_of(Site(r, c), spec) for r in (0, last) for c in (0, last))


def ring_sides(k: int, spec: GridSpec) -> LayerRing:
    """
    レイヤー k (k >= 1) を4辺に分割する。

    各辺は反時計回りで先頭に来る角を1つだけ持つ（top は右上、left は左上、
    bottom は左下、right は右下）。グリッド外のサイトは除かれ、辺が空になる
    こともある。

    Raises:
        ValueError: k < 1 の場合（レイヤー0はソースレイヤーにならない）
    """
    if k < 1:
        raise ValueError(f"ring_sides は k >= 1 が必要です: {k}")

    lo, hi = layer_bounds(k, spec)
    top = [Site(lo, c) for c in range(hi, lo, -1)]
    left = [Site(r, lo) for r in range(lo, hi)]
    bottom = [Site(hi, c) for c in range(lo, hi)]
    right = [Site(r, hi) for r in range(hi, lo, -1)]

    def clip(seq: List[Site]) -> Tuple[Site, ...]:
        return tuple(s for s in seq if spec.in_grid(s.row, s.col))

    return LayerRing(k, clip(top), clip(left), clip(bottom), clip(right))


def core_sites(spec: GridSpec) -> List[Site]:
    """レイヤー0（中心の1×1 または 2×2 ブロック）のサイト。"""
    lo, hi = layer_bounds(0, spec)
    return [Site(r, c) for r in range(lo, hi + 1) for c in range(lo, hi + 1)]


def target_mask(spec: GridSpec) -> np.ndarray:
    """ターゲット領域を True とする L'×L' の真偽値マスク。"""
    mask = np.zeros((spec.Lprime, spec.Lprime), dtype=bool)
    lo, hi = spec.offset, spec.offset + spec.L
    mask[lo:hi, lo:hi] = True
    return mask


def target_sites(spec: GridSpec) -> List[Site]:
    lo, hi = spec.offset, spec.offset + spec.L
    return [Site(r, c) for r in range(lo, hi) for c in range(lo, hi)]
