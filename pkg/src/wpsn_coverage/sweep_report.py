"""Parameter-sweep engine plus CSV and SVG serializers.

Each sweep tabulates one design relation (induced voltage vs. received
power, activation range vs. transmit power, source count vs. power /
area, required power vs. frequency) over a deterministic grid, with one
row per (axis value, series value). Serialization is byte-stable:
identical inputs always produce identical files.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field as dc_field
from enum import Enum

import numpy as np

from .coverage import EventField, required_power, source_count
from .link_budget import RadioParams, induced_voltage, max_range
from .quantities import ValidationError


class Axis(str, Enum):
    RECEIVED_POWER = "received_power"
    TRANSMIT_POWER = "transmit_power"
    FREQUENCY = "frequency"
    AREA = "area"


class Spacing(str, Enum):
    LINEAR = "linear"
    LOGARITHMIC = "logarithmic"


@dataclass(frozen=True)
class SweepSpec:
    axis: Axis
    start: float
    stop: float
    points: int
    spacing: Spacing = Spacing.LINEAR
    series: tuple = ()
    radio: RadioParams | None = None
    field: EventField | None = None
    include: tuple[float, ...] = ()  # extra axis values merged into the grid

    def __post_init__(self):
        object.__setattr__(self, "axis", Axis(self.axis))
        object.__setattr__(self, "spacing", Spacing(self.spacing))
        object.__setattr__(self, "series", tuple(self.series))
        object.__setattr__(self, "include", tuple(float(v) for v in self.include))
        if not math.isfinite(self.start) or not math.isfinite(self.stop):
            raise ValidationError("sweep bounds must be finite")
        if self.start >= self.stop:
            raise ValidationError(
                f"sweep start must be < stop, got [{self.start}, {self.stop}]"
            )
        if self.points < 2:
            raise ValidationError(f"sweep needs >= 2 points, got {self.points}")
        if self.spacing is Spacing.LOGARITHMIC and self.start <= 0:
            raise ValidationError("logarithmic spacing requires start > 0")

    def axis_values(self) -> list[float]:
        if self.spacing is Spacing.LINEAR:
            grid = np.linspace(self.start, self.stop, self.points)
        else:
            grid = np.logspace(
                math.log10(self.start), math.log10(self.stop), self.points
            )
        values = set(grid.tolist())
        values.update(v for v in self.include if self.start <= v <= self.stop)
        return sorted(values)


@dataclass(frozen=True)
class SweepTable:
    columns: tuple[str, ...]
    rows: tuple[tuple[float, ...], ...]
    metadata: dict = dc_field(default_factory=dict)

    def __post_init__(self):
        for row in self.rows:
            if len(row) != len(self.columns):
                raise ValidationError(
                    f"row arity {len(row)} != {len(self.columns)} columns"
                )

    def column(self, name: str) -> list[float]:
        idx = self.columns.index(name)
        return [row[idx] for row in self.rows]


def _require_axis(spec: SweepSpec, axis: Axis) -> None:
    if spec.axis is not axis:
        raise ValidationError(f"sweep expects axis={axis.value}, got {spec.axis.value}")


def _require_radio(spec: SweepSpec) -> RadioParams:
    if spec.radio is None:
        raise ValidationError("sweep spec needs base radio parameters")
    return spec.radio


def _require_field(spec: SweepSpec) -> EventField:
    if spec.field is None:
        raise ValidationError("sweep spec needs an event field")
    return spec.field


def _base_metadata(spec: SweepSpec) -> dict:
    meta: dict = {
        "axis": spec.axis.value,
        "start": spec.start,
        "stop": spec.stop,
        "points": spec.points,
        "spacing": spec.spacing.value,
    }
    if spec.radio is not None:
        r = spec.radio
        meta.update(
            p_t_w=r.p_t.watts,
            g_t_linear=r.g_t.linear,
            g_r_linear=r.g_r.linear,
            f_hz=r.f.hertz,
            v_min_v=r.v_min.volts,
            r_r_ohm=r.r_r.ohms,
            r_l_ohm=r.r_l.ohms,
        )
    if spec.field is not None:
        meta.update(field_width_m=spec.field.width, field_height_m=spec.field.height)
    return meta


def sweep_voltage_vs_power(spec: SweepSpec) -> SweepTable:
    """Induced antenna voltage over a received-power grid."""
    _require_axis(spec, Axis.RECEIVED_POWER)
    radio = _require_radio(spec)
    if spec.start < 0:
        raise ValidationError("received power must be >= 0")
    rows = []
    for p_r in spec.axis_values():
        v = induced_voltage(p_r, radio.r_r, radio.r_l).volts
        rows.append((p_r, v))
    return SweepTable(
        columns=("p_r_w", "v_induced_v"),
        rows=tuple(rows),
        metadata={**_base_metadata(spec), "figure": 4},
    )


def sweep_range_vs_power(spec: SweepSpec) -> SweepTable:
    """Activation range over a transmit-power grid, one series per frequency."""
    _require_axis(spec, Axis.TRANSMIT_POWER)
    radio = _require_radio(spec)
    rows = []
    for p_t in spec.axis_values():
        for f_hz in spec.series:
            r = max_range(radio.with_power(p_t).with_frequency(f_hz)).meters
            rows.append((p_t, f_hz, r))
    return SweepTable(
        columns=("p_t_w", "f_hz", "max_range_m"),
        rows=tuple(rows),
        metadata={**_base_metadata(spec), "figure": 5},
    )


def sweep_sources_vs_power(spec: SweepSpec) -> SweepTable:
    """Source count over a transmit-power grid, one series per frequency."""
    _require_axis(spec, Axis.TRANSMIT_POWER)
    radio = _require_radio(spec)
    field = _require_field(spec)
    rows = []
    for p_t in spec.axis_values():
        for f_hz in spec.series:
            k = source_count(field, radio.with_power(p_t).with_frequency(f_hz))
            rows.append((p_t, f_hz, k.exact, float(k.required)))
    return SweepTable(
        columns=("p_t_w", "f_hz", "k_exact", "k_required"),
        rows=tuple(rows),
        metadata={**_base_metadata(spec), "figure": 6},
    )


def sweep_power_vs_frequency(spec: SweepSpec) -> SweepTable:
    """Required transmit power over a frequency grid, one series per k."""
    _require_axis(spec, Axis.FREQUENCY)
    radio = _require_radio(spec)
    field = _require_field(spec)
    rows = []
    for f_hz in spec.axis_values():
        for k in spec.series:
            p = required_power(field, int(k), radio.with_frequency(f_hz)).watts
            rows.append((f_hz, float(k), p))
    return SweepTable(
        columns=("f_hz", "k", "required_power_w"),
        rows=tuple(rows),
        metadata={**_base_metadata(spec), "figure": 7},
    )


def sweep_sources_vs_area(spec: SweepSpec) -> SweepTable:
    """Source count over an area grid, one series per (p_t, f) pair."""
    _require_axis(spec, Axis.AREA)
    radio = _require_radio(spec)
    rows = []
    for area in spec.axis_values():
        for p_t, f_hz in spec.series:
            k = source_count(area, radio.with_power(p_t).with_frequency(f_hz))
            rows.append((area, p_t, f_hz, k.exact, float(k.required)))
    return SweepTable(
        columns=("area_m2", "p_t_w", "f_hz", "k_exact", "k_required"),
        rows=tuple(rows),
        metadata={**_base_metadata(spec), "figure": 8},
    )


def _format_number(value) -> str:
    """Shortest decimal that round-trips; integers without exponent noise."""
    if isinstance(value, int):
        return str(value)
    f = float(value)
    if f == int(f) and abs(f) < 1e16:
        return str(int(f))
    return repr(f)


def render_csv(table: SweepTable) -> str:
    """CSV text: '#'-prefixed metadata, header, then rows. LF endings."""
    lines = []
    for key in sorted(table.metadata):
        lines.append(f"# {key} = {_format_number(table.metadata[key]) if isinstance(table.metadata[key], (int, float)) else table.metadata[key]}")
    lines.append(",".join(table.columns))
    for row in table.rows:
        lines.append(",".join(_format_number(v) for v in row))
    return "\n".join(lines) + "\n"


def write_csv(table: SweepTable, destination) -> None:
    """Write the table to a path or text stream."""
    text = render_csv(table)
    if hasattr(destination, "write"):
        destination.write(text)
        return
    try:
        with open(destination, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    except OSError as exc:
        raise OSError(f"cannot write CSV to {destination}: {exc}") from exc


def parse_csv(text: str) -> SweepTable:
    """Inverse of render_csv (metadata values come back as strings)."""
    metadata: dict = {}
    header: tuple[str, ...] | None = None
    rows: list[tuple[float, ...]] = []
    for line in text.splitlines():
        if not line:
            continue
        if line.startswith("#"):
            key, _, value = line[1:].partition("=")
            metadata[key.strip()] = value.strip()
        elif header is None:
            header = tuple(line.split(","))
        else:
            rows.append(tuple(float(tok) for tok in line.split(",")))
    if header is None:
        raise ValidationError("CSV has no header line")
    return SweepTable(columns=header, rows=tuple(rows), metadata=metadata)


_SERIES_COLORS = ("#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b")


@dataclass(frozen=True)
class PlotOptions:
    x_col: str
    y_col: str
    series_cols: tuple[str, ...] = ()
    log_x: bool = False
    log_y: bool = False
    title: str = ""
    width: int = 800
    height: int = 600


def _scale(value: float, lo: float, hi: float, out_lo: float, out_hi: float, log: bool) -> float:
    if log:
        value, lo, hi = math.log10(value), math.log10(lo), math.log10(hi)
    if hi == lo:
        return (out_lo + out_hi) / 2.0
    return out_lo + (value - lo) / (hi - lo) * (out_hi - out_lo)


def _ticks(lo: float, hi: float, log: bool) -> list[float]:
    if log:
        first = math.ceil(math.log10(lo) - 1e-9)
        last = math.floor(math.log10(hi) + 1e-9)
        ticks = [10.0**e for e in range(first, last + 1)]
        return ticks or [lo, hi]
    return np.linspace(lo, hi, 5).tolist()


def render_svg(table: SweepTable, options: PlotOptions) -> str:
    """Self-contained SVG line plot, one polyline per series."""
    if not table.rows:
        raise ValidationError("cannot plot an empty table")
    xi = table.columns.index(options.x_col)
    yi = table.columns.index(options.y_col)
    si = [table.columns.index(c) for c in options.series_cols]

    series: dict[tuple, list[tuple[float, float]]] = {}
    for row in table.rows:
        key = tuple(row[i] for i in si)
        series.setdefault(key, []).append((row[xi], row[yi]))

    xs = [row[xi] for row in table.rows]
    ys = [row[yi] for row in table.rows]
    x_lo, x_hi = min(xs), max(xs)
    y_lo, y_hi = min(ys), max(ys)
    if options.log_x and x_lo <= 0:
        raise ValidationError("log x scale requires positive x values")
    if options.log_y and y_lo <= 0:
        raise ValidationError("log y scale requires positive y values")
    if y_lo == y_hi:
        y_lo, y_hi = y_lo - 1.0, y_hi + 1.0

    w, h = options.width, options.height
    left, right, top, bottom = 70, w - 170, 50, h - 60

    def sx(v):
        return _scale(v, x_lo, x_hi, left, right, options.log_x)

    def sy(v):
        return _scale(v, y_lo, y_hi, bottom, top, options.log_y)

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" viewBox="0 0 {w} {h}" '
        f'width="{w}" height="{h}">',
        f'<rect x="0" y="0" width="{w}" height="{h}" fill="white"/>',
        f'<line x1="{left}" y1="{bottom}" x2="{right}" y2="{bottom}" stroke="black"/>',
        f'<line x1="{left}" y1="{top}" x2="{left}" y2="{bottom}" stroke="black"/>',
    ]
    if options.title:
        parts.append(
            f'<text x="{(left + right) / 2:.1f}" y="30" text-anchor="middle" '
            f'font-size="16">{options.title}</text>'
        )
    for t in _ticks(x_lo, x_hi, options.log_x):
        px = sx(t)
        parts.append(
            f'<line x1="{px:.2f}" y1="{bottom}" x2="{px:.2f}" y2="{bottom + 5}" stroke="black"/>'
        )
        parts.append(
            f'<text x="{px:.2f}" y="{bottom + 20}" text-anchor="middle" font-size="11">'
            f"{t:.4g}</text>"
        )
    for t in _ticks(y_lo, y_hi, options.log_y):
        py = sy(t)
        parts.append(
            f'<line x1="{left - 5}" y1="{py:.2f}" x2="{left}" y2="{py:.2f}" stroke="black"/>'
        )
        parts.append(
            f'<text x="{left - 8}" y="{py + 4:.2f}" text-anchor="end" font-size="11">'
            f"{t:.4g}</text>"
        )
    parts.append(
        f'<text x="{(left + right) / 2:.1f}" y="{h - 15}" text-anchor="middle" '
        f'font-size="13">{options.x_col}</text>'
    )
    parts.append(
        f'<text x="20" y="{(top + bottom) / 2:.1f}" text-anchor="middle" font-size="13" '
        f'transform="rotate(-90 20 {(top + bottom) / 2:.1f})">{options.y_col}</text>'
    )
    for n, (key, pts) in enumerate(sorted(series.items())):
        color = _SERIES_COLORS[n % len(_SERIES_COLORS)]
        pts = sorted(pts)
        coords = " ".join(f"{sx(x):.2f},{sy(y):.2f}" for x, y in pts)
        parts.append(
            f'<polyline points="{coords}" fill="none" stroke="{color}" stroke-width="1.5"/>'
        )
        label = ", ".join(f"{c}={_format_number(v)}" for c, v in zip(options.series_cols, key)) or options.y_col
        ly = top + 18 * n
        parts.append(
            f'<line x1="{right + 10}" y1="{ly + 10}" x2="{right + 30}" y2="{ly + 10}" '
            f'stroke="{color}" stroke-width="1.5"/>'
        )
        parts.append(
            f'<text x="{right + 35}" y="{ly + 14}" font-size="11">{label}</text>'
        )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def write_svg_plot(table: SweepTable, options: PlotOptions, destination) -> None:
    """Write an SVG rendering of the table to a path or text stream."""
    text = render_svg(table, options)
    if hasattr(destination, "write"):
        destination.write(text)
        return
    try:
        with open(destination, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    except OSError as exc:
        raise OSError(f"cannot write SVG to {destination}: {exc}") from exc
