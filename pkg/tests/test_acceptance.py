"""Acceptance suite: one test per release criterion, each printing a
PASS line once its assertions hold (run with -s or -rP to see them)."""

import math
import random

import pytest

from wpsn_coverage import figures
from wpsn_coverage.coverage import EventField, source_count
from wpsn_coverage.deployment import (
    Deployment,
    Strategy,
    monte_carlo_coverage,
    place_sources,
    scatter_nodes,
    coverage_report,
    detect_interference,
)
from wpsn_coverage.link_budget import RadioParams, max_range, received_power
from wpsn_coverage.sweep_report import render_csv, render_svg
from wpsn_coverage.scenario import parse_scenario


ANCHOR_RADIO = RadioParams.from_eirp_product(4.0, 2e9)  # p_t*g_t*g_r = 4 W
DESIGN_RADIO = RadioParams.from_si(1.0, 8.5, 8.5, 1e9)
FIELD_4E4 = EventField.square_from_area(4e4)


def _report(criterion: str):
    print(f"PASS {criterion}")


def test_criterion_1_range_anchors():
    """Activation ranges reproduce 6.75 / 13.49 / 26.98 m within 0.2%."""
    for f_hz, anchor_m in ((2e9, 6.75), (1e9, 13.49), (5e8, 26.98)):
        got = max_range(ANCHOR_RADIO.with_frequency(f_hz)).meters
        assert got == pytest.approx(anchor_m, rel=2e-3), f"{f_hz} Hz: {got} vs {anchor_m}"
    _report("criterion 1: range anchors 6.75/13.49/26.98 m within 0.2%")


def test_criterion_2_source_count_anchor():
    """Analytic source count at the 4e4 m2 / 1 GHz / 1 W design point."""
    k = source_count(FIELD_4E4, DESIGN_RADIO)
    assert k.exact == pytest.approx(5.58, abs=0.02)
    assert k.required == 6
    _report("criterion 2: source count 5.58 +/- 0.02 at the design point")


def test_criterion_3_formula_equivalence():
    """Closed-form count equals area/(pi*range^2) over 1000 random draws."""
    rng = random.Random(12345)
    for _ in range(1000):
        radio = RadioParams.from_si(
            p_t_w=rng.uniform(1e-3, 1e3),
            g_t_dbi=rng.uniform(-10, 30),
            g_r_dbi=rng.uniform(-10, 30),
            f_hz=rng.uniform(1e7, 1e11),
            v_min_v=rng.uniform(1e-3, 10.0),
            r_r_ohm=rng.uniform(1.0, 1e3),
            r_l_ohm=rng.uniform(1.0, 1e3),
        )
        area = rng.uniform(1.0, 1e8)
        closed = source_count(area, radio).exact
        geometric = area / (math.pi * max_range(radio).meters ** 2)
        assert closed == pytest.approx(geometric, rel=1e-9)
    _report("criterion 3: formula equivalence over 1000 random parameter sets")


def test_criterion_4_scaling_laws():
    """k ~ area, k ~ f^2, k ~ 1/P; range ~ lambda, range ~ sqrt(P); P_r ~ 1/d^2."""
    rng = random.Random(6789)
    for _ in range(200):
        radio = RadioParams.from_si(
            p_t_w=rng.uniform(1e-2, 1e2),
            g_t_dbi=rng.uniform(-5, 20),
            g_r_dbi=rng.uniform(-5, 20),
            f_hz=rng.uniform(1e8, 1e10),
            v_min_v=rng.uniform(1e-2, 1.0),
        )
        area = rng.uniform(1e2, 1e6)
        k = source_count(area, radio).exact
        assert source_count(2 * area, radio).exact == pytest.approx(2 * k, rel=1e-12)
        assert source_count(area, radio.with_frequency(2 * radio.f.hertz)).exact == (
            pytest.approx(4 * k, rel=1e-12)
        )
        assert source_count(area, radio.with_power(4 * radio.p_t.watts)).exact == (
            pytest.approx(k / 4, rel=1e-12)
        )
        r = max_range(radio).meters
        assert max_range(radio.with_frequency(radio.f.hertz / 2)).meters == (
            pytest.approx(2 * r, rel=1e-12)
        )
        assert max_range(radio.with_power(4 * radio.p_t.watts)).meters == (
            pytest.approx(2 * r, rel=1e-12)
        )
        d = rng.uniform(0.1, 100.0)
        assert received_power(radio, 2 * d).watts == pytest.approx(
            received_power(radio, d).watts / 4, rel=1e-12
        )
    _report("criterion 4: scaling laws exact to 1e-12 relative")


def test_criterion_5_packing_loss():
    """Single disc in its bounding cell = pi/4; hex grid in [0.80, 0.917]."""
    disc = Deployment(EventField(20.0, 20.0), ((10.0, 10.0),), 10.0, Strategy.EXPLICIT)
    frac = monte_carlo_coverage(disc, 10**6, seed=7)
    assert frac == pytest.approx(math.pi / 4.0, abs=0.003)

    hexa = place_sources(EventField(400.0, 400.0), 10.0, Strategy.HEX_GRID)
    assert len(hexa.sources) >= 100
    hex_frac = monte_carlo_coverage(hexa, 10**6, seed=21)
    assert 0.80 <= hex_frac <= 0.917
    _report(
        f"criterion 5: packing loss (disc {frac:.4f} vs pi/4, hex {hex_frac:.4f})"
    )


def test_criterion_6_interference_contracts():
    """Grids report clean; the 1.5r two-source fixture flags pair + midpoint."""
    field = EventField(240.0, 180.0)
    for strategy in (Strategy.SQUARE_GRID, Strategy.HEX_GRID):
        dep = place_sources(field, 9.0, strategy)
        assert detect_interference(dep, scatter_nodes(field, 2000, seed=4)).clean

    from wpsn_coverage.deployment import NodeField

    r = 10.0
    fixture_field = EventField(100.0, 40.0)
    dep = Deployment(
        fixture_field, ((40.0, 20.0), (40.0 + 1.5 * r, 20.0)), r, Strategy.EXPLICIT
    )
    midpoint = NodeField(
        field=fixture_field, positions=((40.0 + 0.75 * r, 20.0),), seed=0
    )
    report = detect_interference(dep, midpoint)
    assert len(report.source_pairs) == 1
    assert report.source_pairs[0][:2] == (0, 1)
    assert report.multi_fed_nodes == (0,)
    _report("criterion 6: interference contracts (clean grids, flagged fixture)")


def test_criterion_7_determinism():
    """Byte-identical CSV/SVG across runs; Monte Carlo invariant in workers."""
    scenario = parse_scenario("p_t_w = 1\nf_hz = 1GHz\nfield_area_m2 = 4e4\n")
    blobs = []
    for _ in range(2):
        table = figures.figure_table(6, scenario.radio(), scenario.event_field())
        blobs.append(
            render_csv(table) + render_svg(table, figures.figure_plot_options(6))
        )
    assert blobs[0] == blobs[1]

    dep = place_sources(EventField(300.0, 300.0), 12.0, Strategy.HEX_GRID)
    results = {
        monte_carlo_coverage(dep, 10**5 + 3, seed=99, workers=w) for w in (1, 2, 5)
    }
    assert len(results) == 1
    _report("criterion 7: determinism (byte-stable files, worker-invariant MC)")


def test_criterion_8_figure_regeneration():
    """All five sweep tables satisfy shape contracts and hold the anchors."""
    eirp_radio = RadioParams.from_eirp_product(4.0, 1e9)

    t4 = figures.figure_table(4, DESIGN_RADIO, FIELD_4E4)
    volts = [row[1] for row in t4.rows]
    assert volts == sorted(volts)
    anchor = [r for r in t4.rows if r[0] == 1.25e-5]
    assert anchor and anchor[0][1] == pytest.approx(0.1, rel=1e-9)

    t5 = figures.figure_table(5, eirp_radio, FIELD_4E4)
    for f_hz in figures.FREQUENCY_SERIES_HZ:
        rows = [r for r in t5.rows if r[1] == f_hz]
        ranges = [r[2] for r in rows]
        assert ranges == sorted(ranges)  # increasing in power
    anchor_rows = {
        f_hz: next(r[2] for r in t5.rows if r[0] == 4.0 and r[1] == f_hz)
        for f_hz in figures.FREQUENCY_SERIES_HZ
    }
    assert anchor_rows[2e9] == pytest.approx(6.75, rel=2e-3)
    assert anchor_rows[1e9] == pytest.approx(13.49, rel=2e-3)
    assert anchor_rows[5e8] == pytest.approx(26.98, rel=2e-3)
    at_4w = sorted((f, r) for f, r in anchor_rows.items())
    assert at_4w[0][1] > at_4w[1][1] > at_4w[2][1]  # decreasing in frequency

    t6 = figures.figure_table(6, DESIGN_RADIO, FIELD_4E4)
    for f_hz in figures.FREQUENCY_SERIES_HZ:
        ks = [r[2] for r in t6.rows if r[1] == f_hz]
        assert ks == sorted(ks, reverse=True)  # decreasing in power
    k_anchor = next(r[2] for r in t6.rows if r[0] == 1.0 and r[1] == 1e9)
    assert k_anchor == pytest.approx(5.58, abs=0.02)
    ks_at_1w = [r[2] for r in t6.rows if r[0] == 1.0]
    assert ks_at_1w == sorted(ks_at_1w)  # increasing in frequency

    t7 = figures.figure_table(7, DESIGN_RADIO, FIELD_4E4)
    for k in (2.0, 4.0, 6.0, 8.0, 10.0):
        powers = [r[2] for r in t7.rows if r[1] == k]
        assert powers == sorted(powers)  # increasing in frequency
    at_1ghz = sorted((r[1], r[2]) for r in t7.rows if r[0] == 1e9)
    assert all(a[1] > b[1] for a, b in zip(at_1ghz, at_1ghz[1:]))  # larger k below

    t8 = figures.figure_table(8, DESIGN_RADIO, FIELD_4E4)
    for p_t, f_hz in ((1.0, f) for f in figures.FREQUENCY_SERIES_HZ):
        rows = [r for r in t8.rows if r[1] == p_t and r[2] == f_hz]
        slope = rows[0][3] / rows[0][0]
        for area, _, _, k_exact, _ in rows:
            assert k_exact == pytest.approx(slope * area, rel=1e-9)  # linear, zero intercept
    _report("criterion 8: figure tables keep their shapes and anchor rows")
