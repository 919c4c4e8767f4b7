"""
格子の幾何のテスト
"""
import numpy as np
import pytest

from src.lattice import (
    core_sites,
    inward_steps,
    layer_grid,
    layer_of,
    lprime_range,
    make_spec,
    max_layer,
    ring_sides,
    target_mask,
    target_sites,
)
from src.models.data_models import GridSpec, ReservoirMode
from src.models.move_models import Side, Site


def test_make_spec_default_reservoir():
    """default モードの L'"""
    spec = make_spec(14, 0.5)
    assert spec.Lprime == 21
    assert spec.offset == 3
    assert spec.N == 196


def test_make_spec_saturated_reservoir():
    """saturated モードの L' と r"""
    spec = make_spec(14, 0.5, ReservoirMode.SATURATED)
    assert spec.Lprime == 35
    assert spec.reservoir_ratio == pytest.approx(3.125)


def test_make_spec_single_site():
    spec = make_spec(1, 1.0)
    assert spec.Lprime == 2
    assert spec.offset == 0


def test_make_spec_explicit():
    spec = make_spec(6, 0.5, "explicit", lprime=9)
    assert spec.Lprime == 9
    assert spec.offset == 1


@pytest.mark.parametrize(
    "kwargs",
    [
        {"L": 0, "p": 0.5},
        {"L": 4, "p": 0.0},
        {"L": 4, "p": 1.5},
        {"L": 4, "p": 0.5, "reservoir_mode": "explicit"},
        {"L": 4, "p": 0.5, "reservoir_mode": "explicit", "lprime": 3},
    ],
)
def test_make_spec_rejects_invalid(kwargs):
    with pytest.raises(ValueError):
        make_spec(**kwargs)


def test_gridspec_rejects_small_lprime():
    with pytest.raises(ValueError):
        GridSpec(L=5, Lprime=4, p=0.5)


def test_lprime_range_spans_default_to_saturated():
    values = lprime_range(14, 0.5)
    assert values[0] == 21
    assert values[-1] == 35
    assert values == list(range(21, 36))


@pytest.mark.parametrize(
    "L, site, expected",
    [
        (5, Site(2, 2), 0),
        (5, Site(0, 4), 2),
        (6, Site(2, 3), 0),
        (6, Site(1, 2), 1),
        (6, Site(0, 0), 2),
    ],
)
def test_layer_of(L, site, expected):
    spec = GridSpec(L=L, Lprime=L, p=0.5)
    assert layer_of(site, spec) == expected


def test_layer_grid_matches_layer_of():
    spec = GridSpec(L=4, Lprime=9, p=0.5)
    grid = layer_grid(spec)
    for r in range(9):
        for c in range(9):
            assert grid[r, c] == layer_of(Site(r, c), spec)


@pytest.mark.parametrize("L, expected", [(6, 2), (5, 2), (1, 0)])
def test_max_layer(L, expected):
    assert max_layer(GridSpec(L=L, Lprime=L, p=0.5)) == expected


def test_ring_sides_even_target():
    """L=6 のレイヤー1は 4x4 の外周 12 サイトで、各辺 3 サイト"""
    spec = GridSpec(L=6, Lprime=6, p=0.5)
    ring = ring_sides(1, spec)

    assert ring.top == (Site(1, 4), Site(1, 3), Site(1, 2))
    assert ring.left == (Site(1, 1), Site(2, 1), Site(3, 1))
    assert ring.bottom == (Site(4, 1), Site(4, 2), Site(4, 3))
    assert ring.right == (Site(4, 4), Site(3, 4), Site(2, 4))
    assert len(ring) == 12
    assert len(set(ring.sites())) == 12
    assert all(layer_of(s, spec) == 1 for s in ring.sites())


def test_ring_sides_perimeter():
    """L=5 のレイヤー2はグリッドの外周 16 サイト"""
    spec = GridSpec(L=5, Lprime=5, p=0.5)
    ring = ring_sides(2, spec)

    assert len(ring) == 16
    assert all(len(seq) == 4 for _, seq in ring.sides())
    perimeter = {
        Site(r, c) for r in range(5) for c in range(5) if r in (0, 4) or c in (0, 4)
    }
    assert set(ring.sites()) == perimeter


def test_ring_sides_clipped_to_grid():
    """L=4, L'=5 では最外レイヤーの一部がグリッド外になる"""
    spec = GridSpec(L=4, Lprime=5, p=0.5)
    k = max_layer(spec)
    ring = ring_sides(k, spec)
    assert all(spec.in_grid(*s) for s in ring.sites())
    assert len(ring.side(Side.TOP)) + len(ring.side(Side.BOTTOM)) > 0


def test_ring_sides_rejects_core():
    with pytest.raises(ValueError):
        ring_sides(0, GridSpec(L=4, Lprime=4, p=0.5))


def _assert_partition(spec):
    """コアと各リングがグリッドを重複なく覆い、リング k のサイトはレイヤー k"""
    size = spec.Lprime
    seen = set(core_sites(spec))
    assert all(layer_of(s, spec) == 0 for s in seen)
    for k in range(1, max_layer(spec) + 1):
        sites = ring_sides(k, spec).sites()
        ring = set(sites)
        assert len(ring) == len(sites)
        assert not (ring & seen), f"L={spec.L} L'={size} k={k}"
        assert all(layer_of(s, spec) == k for s in ring)
        seen |= ring
    assert seen == {Site(r, c) for r in range(size) for c in range(size)}


def _lattice_specs(max_size):
    return [
        GridSpec(L=L, Lprime=size, p=0.5)
        for size in range(1, max_size + 1)
        for L in range(1, size + 1)
    ]


def test_layers_partition_grid():
    _assert_partition(GridSpec(L=6, Lprime=11, p=0.5))


def test_layers_partition_small_grids():
    for spec in _lattice_specs(12):
        _assert_partition(spec)


@pytest.mark.slow
def test_layers_partition_all_grids():
    """L' <= 64 のすべての (L, L')"""
    for spec in _lattice_specs(64):
        _assert_partition(spec)


@pytest.mark.parametrize("L, size", [(1, 1), (3, 8), (4, 9), (6, 11), (7, 20)])
def test_layers_grow_away_from_center(L, size):
    """中心から離れる向きに1歩進むとレイヤー番号は減らない"""
    spec = GridSpec(L=L, Lprime=size, p=0.5)
    grid = layer_grid(spec)
    d = 2 * np.arange(size) - spec.center2
    for i in range(size - 1):
        if d[i] >= 0:
            assert (grid[i + 1] >= grid[i]).all()
            assert (grid[:, i + 1] >= grid[:, i]).all()
        if d[i + 1] <= 0:
            assert (grid[i] >= grid[i + 1]).all()
            assert (grid[:, i] >= grid[:, i + 1]).all()
    # 同心の正方形: グリッドに収まるレイヤーのサイト数は外周の長さ
    for k in range(1, max_layer(spec) + 1):
        half = 2 * k + spec.center2 % 2
        if spec.center2 - half >= 0 and spec.center2 + half <= 2 * (size - 1):
            assert (grid == k).sum() == 4 * half


@pytest.mark.parametrize("L, size", [(2, 6), (3, 7), (6, 6), (4, 11)])
def test_inward_steps_reduce_layer(L, size):
    spec = GridSpec(L=L, Lprime=size, p=0.5)
    drow, dcol = inward_steps(spec)
    grid = layer_grid(spec)
    rows, cols = np.indices(grid.shape)
    diagonal = (drow == 0) & (dcol == 0)
    # 1歩は行か列の一方だけ
    assert ((drow == 0) | (dcol == 0)).all()
    d = 2 * np.arange(size) - spec.center2
    assert (diagonal == (np.abs(d)[:, None] == np.abs(d)[None, :])).all()
    inner = grid[rows + drow, cols + dcol]
    assert (inner[~diagonal] == grid[~diagonal] - 1).all()


@pytest.mark.parametrize("L, size", [(5, 1), (6, 4)])
def test_core_sites(L, size):
    assert len(core_sites(GridSpec(L=L, Lprime=L, p=0.5))) == size


def test_target_mask_and_sites():
    spec = GridSpec(L=2, Lprime=4, p=0.5)
    mask = target_mask(spec)
    assert mask.sum() == 4
    assert {Site(int(r), int(c)) for r, c in zip(*mask.nonzero())} == set(
        target_sites(spec)
    )
    assert spec.in_target(1, 1)
    assert not spec.in_target(0, 1)
