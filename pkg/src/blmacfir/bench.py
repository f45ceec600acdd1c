"""Population benchmarks: addition-count statistics and the machine cycle study.

For every (window, taps) pair the cutoff-grid sweep designs grid_n*(grid_n-1)
filters, quantizes them to 16 bits and totals the additions each one needs:
the symmetric pre-adds plus one add per signed-digit pulse of the
half-coefficient vector.  Aggregates are exact integer sums until the final
division.  The cycle study times the 127-tap machine over the same
population.
"""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass
from pathlib import Path
from typing import Iterator, Sequence

import numpy as np

from . import blmac, firdesign, machine, sdr
from .firdesign import Window
from .quantize import QuantizedFilter, quantize

SWEEP_CSV_FIELDS = [
    "window", "taps", "count", "mean_adds", "stddev", "min", "max",
    "adds_per_coeff", "adds_per_tap",
]

CYCLES_CSV_FIELDS = [
    "window", "taps", "count", "over_capacity", "excluded_fraction",
    "mean_cycles", "mean_cycles_loadable", "min_cycles", "max_cycles",
    "mean_cycles_fused",
]

CALIBRATION_CSV_FIELDS = ["beta", "mean_adds_55", "mean_adds_255", "worst_error"]

# reference endpoint means used to score Kaiser calibration candidates
KAISER_REFERENCE_MEAN_ADDS = {55: 123.3, 255: 474.7}


@dataclass(frozen=True)
class AdditionStats:
    """Per-(window, taps) statistics of total additions over the population."""

    window: str
    taps: int
    count: int
    mean_adds: float
    stddev: float
    min_adds: int
    max_adds: int

    @property
    def adds_per_coeff(self) -> float:
        """Mean additions per half-vector coefficient, pre-adds removed."""
        return (self.mean_adds - self.taps // 2) / (self.taps // 2 + 1)

    @property
    def adds_per_tap(self) -> float:
        return self.mean_adds / self.taps


@dataclass(frozen=True)
class CalibrationRow:
    beta: float
    mean_adds: dict[int, float]

    @property
    def worst_error(self) -> float:
        """Largest relative distance from the reference endpoint means."""
        return max(
            abs(self.mean_adds[t] - ref) / ref
            for t, ref in KAISER_REFERENCE_MEAN_ADDS.items()
        )


def filter_population(
    window: Window, taps: int, grid_n: int = 100
) -> Iterator[QuantizedFilter]:
    """Design and quantize the whole cutoff-grid population, streaming."""
    for spec in firdesign.sweep(grid_n, [taps], window):
        yield quantize(firdesign.design(spec))


def filter_additions(filt: QuantizedFilter, table: np.ndarray | None = None) -> int:
    """Total additions for one quantized filter (pre-adds + pulses)."""
    if table is None:
        return blmac.count_filter_additions(filt.half_coeffs(), filt.taps)
    return filt.taps // 2 + int(table[np.abs(filt.half_coeffs())].sum())


def run_sweep(
    window: Window,
    taps_list: Sequence[int],
    grid_n: int = 100,
) -> list[AdditionStats]:
    """Addition statistics per taps value over the cutoff-grid population."""
    table = sdr.build_ntrits_table(16)
    out = []
    for taps in taps_list:
        total = 0
        total_sq = 0
        lo, hi = None, 0
        n = 0
        for filt in filter_population(window, taps, grid_n):
            adds = filter_additions(filt, table)
            total += adds
            total_sq += adds * adds
            lo = adds if lo is None else min(lo, adds)
            hi = max(hi, adds)
            n += 1
        mean = total / n
        variance = total_sq / n - mean * mean
        out.append(
            AdditionStats(
                window=window.kind,
                taps=taps,
                count=n,
                mean_adds=mean,
                stddev=math.sqrt(max(variance, 0.0)),
                min_adds=lo,
                max_adds=hi,
            )
        )
    return out


def classical_equivalent_adds(taps: int) -> int:
    """Equivalent-addition cost of the classical symmetric filter routine.

    taps//2 + 1 16-bit multiplies at 15 additions each, plus taps - 1 adds.
    """
    if taps < 1 or taps % 2 == 0:
        raise ValueError(f"taps must be odd, got {taps}")
    return 15 * (taps // 2 + 1) + taps - 1


def machine_study(
    window: Window = Window.hamming(),
    taps: int = 127,
    grid_n: int = 100,
    config: machine.MachineConfig | None = None,
) -> machine.CycleStats:
    """Cycle statistics of the dot-product machine over the sweep population."""
    if config is None:
        config = machine.MachineConfig(taps=taps)
    return machine.measure_cycles(filter_population(window, taps, grid_n), config)


def calibrate_kaiser(
    betas: Sequence[float],
    grid_n: int = 100,
) -> list[CalibrationRow]:
    """Score Kaiser beta candidates by the sweep endpoint means."""
    rows = []
    for beta in betas:
        stats = run_sweep(Window.kaiser(beta), sorted(KAISER_REFERENCE_MEAN_ADDS), grid_n)
        rows.append(CalibrationRow(beta=float(beta), mean_adds={s.taps: s.mean_adds for s in stats}))
    return rows


def write_sweep_csv(stats: Sequence[AdditionStats], path: str | Path) -> None:
    with open(path, "w", newline="") as f:
        writer = csv.writer(f)
        writer.writerow(SWEEP_CSV_FIELDS)
        for s in stats:
            writer.writerow([
                s.window, s.taps, s.count, f"{s.mean_adds:.1f}", f"{s.stddev:.2f}",
                s.min_adds, s.max_adds, f"{s.adds_per_coeff:.3f}", f"{s.adds_per_tap:.3f}",
            ])


def write_cycles_csv(
    stats: machine.CycleStats, window: Window, taps: int, path: str | Path
) -> None:
    with open(path, "w", newline="") as f:
        writer = csv.writer(f)
        writer.writerow(CYCLES_CSV_FIELDS)
        writer.writerow([
            window.kind, taps, stats.n_filters, stats.n_over_capacity,
            f"{stats.excluded_fraction:.4f}", f"{stats.mean_cycles:.1f}",
            f"{stats.mean_cycles_loadable:.1f}", stats.min_cycles, stats.max_cycles,
            f"{stats.mean_cycles_fused:.1f}",
        ])


def write_calibration_csv(rows: Sequence[CalibrationRow], path: str | Path) -> None:
    with open(path, "w", newline="") as f:
        writer = csv.writer(f)
        writer.writerow(CALIBRATION_CSV_FIELDS)
        for r in rows:
            writer.writerow([
                r.beta, f"{r.mean_adds[55]:.1f}", f"{r.mean_adds[255]:.1f}",
                f"{r.worst_error:.4f}",
            ])
