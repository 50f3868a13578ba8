"""Disc placement over a rectangular field, node scattering, coverage
measurement and interference detection.

Grid placements guarantee pairwise source separation >= 2r (disjoint
ranges); explicit placements may violate it, which is exactly what the
interference checker reports.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from enum import Enum

import numpy as np

from . import kernels
from .coverage import EventField
from .quantities import ValidationError, _positive


class Strategy(str, Enum):
    SQUARE_GRID = "square_grid"
    HEX_GRID = "hex_grid"
    EXPLICIT = "explicit"


@dataclass(frozen=True)
class Deployment:
    field: EventField
    sources: tuple[tuple[float, float], ...]
    r_rf: float  # m
    strategy: Strategy

    def __post_init__(self):
        object.__setattr__(self, "r_rf", _positive(self.r_rf, "source range [m]"))
        object.__setattr__(
            self, "sources", tuple((float(x), float(y)) for x, y in self.sources)
        )
        for x, y in self.sources:
            if not self.field.contains(x, y):
                raise ValidationError(
                    f"source ({x}, {y}) lies outside the "
                    f"{self.field.width} x {self.field.height} m field"
                )

    def source_array(self) -> tuple[np.ndarray, np.ndarray]:
        xs = np.array([s[0] for s in self.sources], dtype=np.float64)
        ys = np.array([s[1] for s in self.sources], dtype=np.float64)
        return xs, ys


@dataclass(frozen=True)
class NodeField:
    field: EventField
    positions: tuple[tuple[float, float], ...]
    seed: int

    def position_array(self) -> tuple[np.ndarray, np.ndarray]:
        xs = np.array([p[0] for p in self.positions], dtype=np.float64)
        ys = np.array([p[1] for p in self.positions], dtype=np.float64)
        return xs, ys


@dataclass(frozen=True)
class CoverageReport:
    covered_count: int
    total_count: int
    coverage_fraction: float
    feeding_sources: tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class InterferenceReport:
    source_pairs: tuple[tuple[int, int, float], ...]
    multi_fed_nodes: tuple[int, ...]

    @property
    def clean(self) -> bool:
        return not self.source_pairs and not self.multi_fed_nodes


def place_sources(
    field: EventField, r_rf: float, strategy: Strategy | str
) -> Deployment:
    """Place non-overlapping source discs of radius r_rf on a grid."""
    strategy = Strategy(strategy)
    r = _positive(r_rf, "source range [m]")
    if strategy is Strategy.EXPLICIT:
        raise ValidationError("explicit strategy requires a source list; use Deployment directly")
    if 2.0 * r > min(field.width, field.height):
        raise ValidationError(
            f"no disc of radius {r} m fits in a {field.width} x {field.height} m field"
        )

    positions: list[tuple[float, float]] = []
    if strategy is Strategy.SQUARE_GRID:
        nx = int(field.width // (2.0 * r))
        ny = int(field.height // (2.0 * r))
        for j in range(ny):
            for i in range(nx):
                positions.append(((2 * i + 1) * r, (2 * j + 1) * r))
    else:  # hex grid: row pitch r*sqrt(3), alternate rows shifted by r
        # tiny inflation keeps adjacent-row spacing >= 2r under fp rounding
        pitch = r * math.sqrt(3.0) * (1.0 + 1e-9)
        j = 0
        y = r
        while y <= field.height - r + 1e-12:
            x = r + (r if j % 2 else 0.0)
            while x <= field.width - r + 1e-12:
                positions.append((x, y))
                x += 2.0 * r
            j += 1
            y = r + j * pitch
    return Deployment(field=field, sources=tuple(positions), r_rf=r, strategy=strategy)


def scatter_nodes(field: EventField, n: int, seed: int) -> NodeField:
    """Scatter n uniform node positions; deterministic per (field, n, seed)."""
    if n < 0:
        raise ValidationError(f"node count must be >= 0, got {n}")
    xs, ys = kernels.points_block(seed, 0, n, field.width, field.height)
    return NodeField(
        field=field,
        positions=tuple(zip(xs.tolist(), ys.tolist())),
        seed=seed,
    )


def _feeding_lists(
    dep: Deployment, xs: np.ndarray, ys: np.ndarray
) -> list[tuple[int, ...]]:
    n = xs.size
    if n == 0 or not dep.sources:
        return [()] * n
    sx, sy = dep.source_array()
    r_sq = dep.r_rf * dep.r_rf
    feeding: list[tuple[int, ...]] = []
    chunk = 65536
    for lo in range(0, n, chunk):
        cx = xs[lo : lo + chunk]
        cy = ys[lo : lo + chunk]
        dx = cx[:, None] - sx[None, :]
        dy = cy[:, None] - sy[None, :]
        mask = dx * dx + dy * dy <= r_sq
        hits = np.flatnonzero(mask.ravel())
        node_idx = hits // sx.size
        src_idx = hits % sx.size
        bounds = np.searchsorted(node_idx, np.arange(cx.size + 1))
        for i in range(cx.size):
            feeding.append(tuple(src_idx[bounds[i] : bounds[i + 1]].tolist()))
    return feeding


def coverage_report(dep: Deployment, nodes: NodeField) -> CoverageReport:
    """Exact membership coverage: a node is covered iff its distance to
    some source is <= r_rf (closed disc)."""
    if nodes.field != dep.field:
        raise ValidationError("node field does not match deployment field")
    xs, ys = nodes.position_array()
    feeding = _feeding_lists(dep, xs, ys)
    covered = sum(1 for f in feeding if f)
    total = len(feeding)
    fraction = covered / total if total else 0.0
    return CoverageReport(
        covered_count=covered,
        total_count=total,
        coverage_fraction=fraction,
        feeding_sources=tuple(feeding),
    )


def monte_carlo_coverage(
    dep: Deployment, samples: int, seed: int, workers: int = 1
) -> float:
    """Fraction of uniformly sampled field points inside >=1 source disc.

    The counter-based generator makes the result identical for any worker
    count: each worker evaluates a contiguous block of sample indices and
    the per-index streams never depend on the partition.
    """
    if samples < 1:
        raise ValidationError(f"sample count must be >= 1, got {samples}")
    if not dep.sources:
        return 0.0
    sx, sy = dep.source_array()
    w, h = dep.field.width, dep.field.height

    if workers <= 1:
        total = kernels.covered_count(seed, 0, samples, w, h, sx, sy, dep.r_rf)
    else:
        block = (samples + workers - 1) // workers
        spans = [
            (lo, min(block, samples - lo)) for lo in range(0, samples, block)
        ]
        with ThreadPoolExecutor(max_workers=workers) as pool:
            counts = pool.map(
                lambda span: kernels.covered_count(
                    seed, span[0], span[1], w, h, sx, sy, dep.r_rf
                ),
                spans,
            )
            total = sum(counts)
    return total / samples


def detect_interference(dep: Deployment, nodes: NodeField) -> InterferenceReport:
    """Overlapping-range source pairs and nodes inside >=2 discs."""
    if nodes.field != dep.field:
        raise ValidationError("node field does not match deployment field")
    pairs: list[tuple[int, int, float]] = []
    # relative slack keeps exactly-touching grid discs (spacing 2r up to
    # fp rounding) out of the overlap list
    threshold = 2.0 * dep.r_rf * (1.0 - 1e-12)
    for i in range(len(dep.sources)):
        xi, yi = dep.sources[i]
        for j in range(i + 1, len(dep.sources)):
            xj, yj = dep.sources[j]
            d = math.hypot(xi - xj, yi - yj)
            if d < threshold:
                pairs.append((i, j, d))
    report = coverage_report(dep, nodes)
    multi = tuple(
        idx for idx, feeds in enumerate(report.feeding_sources) if len(feeds) >= 2
    )
    return InterferenceReport(source_pairs=tuple(pairs), multi_fed_nodes=multi)
