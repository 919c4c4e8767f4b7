"""
確率的な単一原子ロード。
"""

from ..lattice import target_mask
from ..models.data_models import GridSpec
from .occupancy import Occupancy
from .rng import CounterRNG


def load_stochastic(spec: GridSpec, seed: int) -> Occupancy:
    """
    各トラップを独立に確率 p で充填した L'×L' の初期配列を作る。

    同じ (spec, seed) からは常に同じ配列が得られる。
    """
    rng = CounterRNG(seed)
    return Occupancy(rng.bernoulli(spec.p, (spec.Lprime, spec.Lprime)))


def _check_dims(occ: Occupancy, spec: GridSpec) -> None:
    if occ.height != spec.Lprime or occ.width != spec.Lprime:
        raise ValueError(
            f"占有グリッド {occ.height}x{occ.width} が L'={spec.Lprime} と一致しません"
        )


def reservoir_ratio(occ: Occupancy, spec: GridSpec) -> float:
    """平均リザーバー比 r = p L'^2 / L^2（GridSpec から計算する）。"""
    _check_dims(occ, spec)
    return spec.reservoir_ratio


def realized_ratio(occ: Occupancy, spec: GridSpec) -> float:
    """実際にロードされた原子数 / N。"""
    _check_dims(occ, spec)
    return occ.atom_count / spec.N


def target_vacancies(occ: Occupancy, spec: GridSpec) -> int:
    """ターゲット領域の空きトラップ数。"""
    _check_dims(occ, spec)
    return int((~occ.filled & target_mask(spec)).sum())
