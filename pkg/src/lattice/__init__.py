"""
格子の幾何モジュール。
"""

from .geometry import (
    LayerRing,
    core_sites,
    inward_steps,
    layer_bounds,
    layer_grid,
    layer_of,
    lprime_range,
    make_spec,
    max_layer,
    ring_sides,
    target_mask,
    target_sites,
)

__all__ = [
    "LayerRing",
    "core_sites",
    "inward_steps",
    "layer_bounds",
    "layer_grid",
    "layer_of",
    "lprime_range",
    "make_spec",
    "max_layer",
    "ring_sides",
    "target_mask",
    "target_sites",
]
