"""Benchmark plumbing on small grids: aggregates, ratios, baseline, determinism."""

import numpy as np
import pytest

from blmacfir import Window, count_filter_additions
from blmacfir.bench import (
    AdditionStats,
    calibrate_kaiser,
    classical_equivalent_adds,
    filter_additions,
    filter_population,
    machine_study,
    run_sweep,
    write_calibration_csv,
    write_cycles_csv,
    write_sweep_csv,
)
from blmacfir.sdr import build_ntrits_table

GRID = 12  # 132-filter population keeps unit tests quick


def test_classical_equivalent_adds():
    assert classical_equivalent_adds(255) == 2_174
    assert classical_equivalent_adds(55) == 15 * 28 + 54
    assert classical_equivalent_adds(1) == 15
    with pytest.raises(ValueError):
        classical_equivalent_adds(4)


def test_filter_additions_table_agrees_with_canonical_count():
    table = build_ntrits_table(16)
    for filt in filter_population(Window.hamming(), 55, grid_n=6):
        assert filter_additions(filt, table) == filter_additions(filt, None)
        assert filter_additions(filt, table) == count_filter_additions(filt.half_coeffs(), 55)


def test_run_sweep_aggregates():
    stats, = run_sweep(Window.hamming(), [55], grid_n=GRID)
    assert stats.count == GRID * (GRID - 1)
    assert stats.min_adds <= stats.mean_adds <= stats.max_adds
    assert stats.stddev > 0
    adds = [filter_additions(f) for f in filter_population(Window.hamming(), 55, GRID)]
    assert stats.mean_adds == pytest.approx(np.mean(adds))
    assert stats.stddev == pytest.approx(np.std(adds))  # population stddev
    assert stats.min_adds == min(adds) and stats.max_adds == max(adds)


def test_derived_ratios():
    stats = AdditionStats(
        window="hamming", taps=55, count=1, mean_adds=132.5, stddev=0.0,
        min_adds=132, max_adds=133,
    )
    assert stats.adds_per_coeff == pytest.approx((132.5 - 27) / 28)
    assert stats.adds_per_tap == pytest.approx(132.5 / 55)


def test_population_counts_match_grid_arithmetic():
    for grid in (3, 7, 12):
        n = sum(1 for _ in filter_population(Window.hamming(), 55, grid))
        assert n == 2 * (grid - 1) + 2 * (grid - 1) * (grid - 2) // 2
        assert n == grid * (grid - 1)


def test_machine_study_cycle_identity(tmp_path):
    stats = machine_study(Window.hamming(), taps=127, grid_n=6)
    assert stats.n_filters == 30
    # every cycle count is pre-add-free additions plus the 16 layer shifts
    per_filter = [
        count_filter_additions(f.half_coeffs(), 127) - 63 + 16
        for f in filter_population(Window.hamming(), 127, 6)
    ]
    assert stats.mean_cycles == pytest.approx(np.mean(per_filter))
    assert stats.min_cycles == min(per_filter)
    assert stats.max_cycles == max(per_filter)
    write_cycles_csv(stats, Window.hamming(), 127, tmp_path / "cycles.csv")
    header, row = (tmp_path / "cycles.csv").read_text().splitlines()
    assert header.startswith("window,taps,count,over_capacity")
    assert row.startswith("hamming,127,30,")


def test_sweep_csv_schema_and_determinism(tmp_path):
    stats = run_sweep(Window.kaiser(8.6), [55, 57], grid_n=6)
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    write_sweep_csv(stats, a)
    write_sweep_csv(run_sweep(Window.kaiser(8.6), [55, 57], grid_n=6), b)
    assert a.read_bytes() == b.read_bytes()
    lines = a.read_text().splitlines()
    assert lines[0] == "window,taps,count,mean_adds,stddev,min,max,adds_per_coeff,adds_per_tap"
    assert len(lines) == 3
    assert lines[1].split(",")[:3] == ["kaiser", "55", "30"]


def test_calibration_rows(tmp_path):
    rows = calibrate_kaiser([8.6], grid_n=5)
    assert rows[0].beta == 8.6
    assert set(rows[0].mean_adds) == {55, 255}
    assert rows[0].worst_error >= 0.0
    write_calibration_csv(rows, tmp_path / "c.csv")
    assert (tmp_path / "c.csv").read_text().splitlines()[0] == (
        "beta,mean_adds_55,mean_adds_255,worst_error"
    )
