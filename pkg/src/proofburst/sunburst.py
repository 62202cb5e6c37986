"""Sunburst radial layout.

The whole proof becomes a disc: the root inference is the center, every
other inference an annular sector at radius proportional to its depth,
with an angular span proportional to its subtree weight inside its
parent's interval.  No edges are drawn; containment is the structure.

Zooming halves the full layout and lays the selected subtree out again
on the outer ring, separated by a small radial gap.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace

import numpy as np

from . import _kernels
from .flatten import FlatTree, flatten
from .metrics import (
    INFERENCE_COUNT,
    ColorGroup,
    ColorProfile,
    WeightMetric,
    classify,
    default_profile,
)
from .proof import InferenceNode, Path, PathOutOfRange, Proof, as_path, node_at, path_str

TWO_PI = 2.0 * math.pi


@dataclass(frozen=True, slots=True)
class SunburstParams:
    radius: float = 1.0
    metric: WeightMetric = INFERENCE_COUNT
    profile: ColorProfile = field(default_factory=default_profile)
    angle_origin: float = 0.0
    clockwise: bool = False
    zoom_gap: float | None = None  # None: 2% of the radius

    def __post_init__(self):
        if self.radius <= 0:
            raise ValueError("radius must be positive")
        if not 0.0 <= self.angle_origin < TWO_PI:
            raise ValueError("angle_origin must lie in [0, 2*pi)")
        if self.zoom_gap is not None and not 0 <= self.zoom_gap < 0.5 * self.radius:
            raise ValueError("zoom_gap must be below half the radius")

    @property
    def gap(self) -> float:
        return 0.02 * self.radius if self.zoom_gap is None else self.zoom_gap


@dataclass(frozen=True, slots=True)
class Sector:
    path: Path
    theta_start: float
    theta_end: float
    r_inner: float
    r_outer: float
    depth: int
    group: ColorGroup

    @property
    def span(self) -> float:
        return self.theta_end - self.theta_start


@dataclass(slots=True)
class SunburstLayout:
    """One sector per node, insertion-ordered pre-order by path."""

    sectors: dict[Path, Sector]
    max_depth: int
    params: SunburstParams


@dataclass(slots=True)
class ZoomLayout:
    overview: SunburstLayout
    detail: SunburstLayout
    selected: Path


def _weights(flat: FlatTree, metric: WeightMetric) -> tuple[np.ndarray, np.ndarray]:
    own = np.empty(len(flat), np.float64)
    node_weight = metric.node_weight
    for i, node in enumerate(flat.nodes):
        own[i] = node_weight(node.rule)
    total = _kernels.subtree_totals(flat.parent, own)
    return own, total


def _layout_flat(flat: FlatTree, params: SunburstParams, r_lo: float, r_hi: float,
                 prefix: Path) -> SunburstLayout:
    own, total = _weights(flat, params.metric)
    t0, t1 = _kernels.sunburst_angles(
        flat.parent, flat.premise_index, flat.arity, total, own,
        params.angle_origin, TWO_PI, params.clockwise,
    )
    d_max = int(flat.depth.max()) if len(flat) else 0
    thickness = (r_hi - r_lo) / (d_max + 1)
    sectors: dict[Path, Sector] = {}
    depths = flat.depth
    for i, path in enumerate(flat.paths):
        d = int(depths[i])
        sectors[prefix + path] = Sector(
            path=prefix + path,
            theta_start=float(t0[i]),
            theta_end=float(t1[i]),
            r_inner=r_lo + d * thickness,
            r_outer=r_lo + (d + 1) * thickness,
            depth=d,
            group=classify(flat.nodes[i].rule),
        )
    return SunburstLayout(sectors, d_max, params)


def layout_sunburst(proof: Proof | InferenceNode, params: SunburstParams | None = None) -> SunburstLayout:
    """Full-disc layout: ring thickness R/(D+1), root spanning the whole circle."""
    params = params or SunburstParams()
    return _layout_flat(flatten(proof), params, 0.0, params.radius, ())


def layout_zoom(proof: Proof | InferenceNode, selected: Path | str,
                params: SunburstParams | None = None) -> ZoomLayout:
    """Half-size overview plus the selected subtree on the outer ring."""
    params = params or SunburstParams()
    sel = as_path(selected)
    subtree = node_at(proof, sel)  # raises PathOutOfRange

    base = layout_sunburst(proof, params)
    overview_sectors = {
        p: replace(s, r_inner=0.5 * s.r_inner, r_outer=0.5 * s.r_outer)
        for p, s in base.sectors.items()
    }
    overview = SunburstLayout(overview_sectors, base.max_depth, params)

    detail = _layout_flat(
        flatten(subtree), params,
        0.5 * params.radius + params.gap, params.radius,
        sel,
    )
    return ZoomLayout(overview, detail, sel)


def focus_subproof(proof: Proof, selected: Path | str) -> Proof:
    """Standalone proof rooted at the selected inference.

    Nodes are immutable, so the subtree is shared, which is
    indistinguishable from a deep copy.
    """
    sel = as_path(selected)
    node = node_at(proof, sel)
    name = f"{proof.name}@{path_str(sel)}" if sel else proof.name
    return Proof(name, node)


def hit_test(layout: SunburstLayout, x: float, y: float) -> Path | None:
    """Sector containing the point (origin at disc center), or None.

    Intervals are half-open in both radius and angle, so boundaries
    resolve uniquely; points at or beyond the outer rim miss.
    Descends ring by ring instead of scanning all sectors.
    """
    params = layout.params
    r = math.hypot(x, y)
    thickness = params.radius / (layout.max_depth + 1)
    ring = int(r // thickness)
    if ring > layout.max_depth:
        return None
    theta = math.atan2(y, x)
    theta = params.angle_origin + (theta - params.angle_origin) % TWO_PI

    path: Path = ()
    for _ in range(ring):
        step = None
        for i in (0, 1):
            child = layout.sectors.get(path + (i,))
            if child is not None and child.theta_start <= theta < child.theta_end:
                step = i
                break
        if step is None:
            return None  # point sits beyond a leaf's outer edge
        path = path + (step,)
    return path


def layout_to_dict(layout: SunburstLayout) -> dict:
    """Wire form: radii normalized so the full disc has radius 1."""
    scale = 1.0 / layout.params.radius
    return {
        "maxDepth": layout.max_depth,
        "sectors": [
            {
                "path": path_str(s.path),
                "t0": s.theta_start,
                "t1": s.theta_end,
                "r0": s.r_inner * scale,
                "r1": s.r_outer * scale,
                "depth": s.depth,
                "group": s.group.value,
            }
            for s in layout.sectors.values()
        ],
    }


def zoom_to_dict(zoom: ZoomLayout) -> dict:
    return {
        "selected": path_str(zoom.selected),
        "overview": layout_to_dict(zoom.overview),
        "detail": layout_to_dict(zoom.detail),
    }
