"""Default sweep grids for the five report figures.

Grids bracket every numeric anchor: transmit power 0.1..10 W
(log, with 1 W and 4 W forced onto the grid), frequencies 0.5/1/2 GHz,
area 1e3..1e5 m2 (linear, with 4e4 m2 forced onto the grid).
"""

from __future__ import annotations

from .coverage import EventField
from .link_budget import RadioParams
from .quantities import ValidationError
from .sweep_report import (
    Axis,
    PlotOptions,
    Spacing,
    SweepSpec,
    SweepTable,
    sweep_power_vs_frequency,
    sweep_range_vs_power,
    sweep_sources_vs_area,
    sweep_sources_vs_power,
    sweep_voltage_vs_power,
)

FREQUENCY_SERIES_HZ = (5.0e8, 1.0e9, 2.0e9)
FIGURES = (4, 5, 6, 7, 8)


def default_spec(figure: int, radio: RadioParams, field: EventField) -> SweepSpec:
    if figure == 4:
        return SweepSpec(
            axis=Axis.RECEIVED_POWER,
            start=0.0,
            stop=1.0e-4,
            points=50,
            spacing=Spacing.LINEAR,
            include=(1.25e-5,),
            radio=radio,
            field=field,
        )
    if figure in (5, 6):
        return SweepSpec(
            axis=Axis.TRANSMIT_POWER,
            start=0.1,
            stop=10.0,
            points=50,
            spacing=Spacing.LOGARITHMIC,
            series=FREQUENCY_SERIES_HZ,
            include=(1.0, 4.0),
            radio=radio,
            field=field,
        )
    if figure == 7:
        return SweepSpec(
            axis=Axis.FREQUENCY,
            start=5.0e8,
            stop=2.0e9,
            points=50,
            spacing=Spacing.LINEAR,
            series=(2.0, 4.0, 6.0, 8.0, 10.0),
            include=(1.0e9,),
            radio=radio,
            field=field,
        )
    if figure == 8:
        return SweepSpec(
            axis=Axis.AREA,
            start=1.0e3,
            stop=1.0e5,
            points=50,
            spacing=Spacing.LINEAR,
            series=tuple((1.0, f) for f in FREQUENCY_SERIES_HZ),
            include=(4.0e4,),
            radio=radio,
            field=field,
        )
    raise ValidationError(f"figure must be one of {FIGURES}, got {figure}")


_SWEEP_FNS = {
    4: sweep_voltage_vs_power,
    5: sweep_range_vs_power,
    6: sweep_sources_vs_power,
    7: sweep_power_vs_frequency,
    8: sweep_sources_vs_area,
}

_PLOT_OPTIONS = {
    4: PlotOptions(x_col="p_r_w", y_col="v_induced_v", title="Induced voltage vs received power"),
    5: PlotOptions(
        x_col="p_t_w", y_col="max_range_m", series_cols=("f_hz",), log_x=True,
        title="Activation range vs transmit power",
    ),
    6: PlotOptions(
        x_col="p_t_w", y_col="k_exact", series_cols=("f_hz",), log_x=True,
        title="Required sources vs transmit power",
    ),
    7: PlotOptions(
        x_col="f_hz", y_col="required_power_w", series_cols=("k",),
        title="Required transmit power vs frequency",
    ),
    8: PlotOptions(
        x_col="area_m2", y_col="k_exact", series_cols=("p_t_w", "f_hz"),
        title="Required sources vs event area",
    ),
}


def figure_table(figure: int, radio: RadioParams, field: EventField) -> SweepTable:
    spec = default_spec(figure, radio, field)
    return _SWEEP_FNS[figure](spec)


def figure_plot_options(figure: int) -> PlotOptions:
    if figure not in _PLOT_OPTIONS:
        raise ValidationError(f"figure must be one of {FIGURES}, got {figure}")
    return _PLOT_OPTIONS[figure]
