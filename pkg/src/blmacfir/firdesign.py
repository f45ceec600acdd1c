"""Windowed-sinc design of odd-length symmetric FIR filters.

Frequencies are normalized so that 1.0 is the Nyquist frequency.  An ideal
band [a, b] contributes b*sinc(b*m) - a*sinc(a*m) at offset m from the centre
tap; low pass is the band [0, f1], high pass [f1, 1], band pass [f1, f2] and
band stop [0, f1] + [f2, 1].  After windowing (Hamming or Kaiser), the
coefficients are scaled for unit response at a reference frequency: DC for
low pass / band stop, Nyquist for high pass, the band centre for band pass.

The construction mirrors the left half onto the right so the type I symmetry
coeffs[j] == coeffs[taps-1-j] holds bit-exactly.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass
from enum import Enum
from typing import Iterator, Sequence

import numpy as np

DEFAULT_KAISER_BETA = 8.6


class FilterKind(str, Enum):
    LOWPASS = "lowpass"
    HIGHPASS = "highpass"
    BANDPASS = "bandpass"
    BANDSTOP = "bandstop"

    @property
    def is_band(self) -> bool:
        return self in (FilterKind.BANDPASS, FilterKind.BANDSTOP)


@dataclass(frozen=True)
class Window:
    """Taper applied to the ideal band response."""

    kind: str
    beta: float | None = None

    @staticmethod
    def hamming() -> "Window":
        return Window("hamming")

    @staticmethod
    def kaiser(beta: float = DEFAULT_KAISER_BETA) -> "Window":
        if beta <= 0:
            raise ValueError("Kaiser beta must be positive")
        return Window("kaiser", float(beta))

    def __str__(self) -> str:
        if self.kind == "kaiser":
            return f"kaiser({self.beta})"
        return self.kind


@dataclass(frozen=True)
class FilterSpec:
    kind: FilterKind
    taps: int
    f1: float
    f2: float | None = None
    window: Window = Window("hamming")

    def validate(self) -> None:
        if self.taps < 3 or self.taps % 2 == 0:
            raise ValueError(f"taps must be odd and >= 3, got {self.taps}")
        if not 0.0 < self.f1 < 1.0:
            raise ValueError(f"f1 must lie in (0, 1), got {self.f1}")
        if self.kind.is_band:
            if self.f2 is None:
                raise ValueError(f"{self.kind.value} needs a second cutoff")
            if not self.f1 < self.f2 < 1.0:
                raise ValueError(f"need f1 < f2 < 1, got f1={self.f1}, f2={self.f2}")
        elif self.f2 is not None:
            raise ValueError(f"{self.kind.value} takes a single cutoff")
        if self.window.kind not in ("hamming", "kaiser"):
            raise ValueError(f"unknown window {self.window.kind!r}")
        if self.window.kind == "kaiser" and not (self.window.beta or 0) > 0:
            raise ValueError("Kaiser window needs a positive beta")


@dataclass(frozen=True, eq=False)
class RealFilter:
    coeffs: np.ndarray
    spec: FilterSpec


def bessel_i0(x):
    """Modified Bessel function I0 by its power series.

    Terms are accumulated until the next one falls below 1e-16 of the running
    sum.  Accepts scalars or arrays.
    """
    x = np.asarray(x, dtype=float)
    q = 0.25 * x * x
    total = np.ones_like(q)
    term = np.ones_like(q)
    k = 0
    while True:
        k += 1
        term = term * q / (k * k)
        total = total + term
        if np.all(term < 1e-16 * total):
            return total if total.ndim else float(total)


def hamming_window(taps: int) -> np.ndarray:
    j = np.arange(taps)
    return 0.54 - 0.46 * np.cos(2.0 * np.pi * j / (taps - 1))


def kaiser_window(taps: int, beta: float) -> np.ndarray:
    t = 2.0 * np.arange(taps) / (taps - 1) - 1.0
    return bessel_i0(beta * np.sqrt(np.maximum(0.0, 1.0 - t * t))) / bessel_i0(beta)


@functools.lru_cache(maxsize=8)
def _window_values(kind: str, beta: float | None, taps: int) -> np.ndarray:
    w = hamming_window(taps) if kind == "hamming" else kaiser_window(taps, beta)
    w.setflags(write=False)
    return w


def _bands(spec: FilterSpec) -> list[tuple[float, float]]:
    if spec.kind is FilterKind.LOWPASS:
        return [(0.0, spec.f1)]
    if spec.kind is FilterKind.HIGHPASS:
        return [(spec.f1, 1.0)]
    if spec.kind is FilterKind.BANDPASS:
        return [(spec.f1, spec.f2)]
    return [(0.0, spec.f1), (spec.f2, 1.0)]


def frequency_response(coeffs: Sequence[float], f: float) -> float:
    """Signed response amplitude at normalized frequency f (1.0 = Nyquist).

    Direct cosine sum about the centre tap; valid for symmetric filters,
    where the response is real up to the linear phase term.
    """
    coeffs = np.asarray(coeffs, dtype=float)
    m = np.arange(len(coeffs)) - (len(coeffs) - 1) / 2
    return float(np.dot(coeffs, np.cos(np.pi * f * m)))


def design(spec: FilterSpec) -> RealFilter:
    """Design one filter; coefficients come out bit-exactly symmetric."""
    spec.validate()
    taps = spec.taps
    half = (taps - 1) // 2
    m = np.arange(taps, dtype=float) - half
    h = np.zeros(taps)
    for a, b in _bands(spec):
        h += b * np.sinc(b * m) - a * np.sinc(a * m)
    h *= _window_values(spec.window.kind, spec.window.beta, taps)
    h = np.concatenate([h[:half], h[half : half + 1], h[:half][::-1]])

    first_a, first_b = _bands(spec)[0]
    if first_a == 0.0:
        ref = 0.0
    elif first_b == 1.0:
        ref = 1.0
    else:
        ref = 0.5 * (first_a + first_b)
    h /= np.dot(h, np.cos(np.pi * ref * m))
    return RealFilter(coeffs=h, spec=spec)


def sweep(grid_n: int, taps_list: Sequence[int], window: Window) -> Iterator[FilterSpec]:
    """All specs of the cutoff-grid population, grid_n * (grid_n - 1) per taps value.

    Per taps: grid_n - 1 low pass and high pass at k/grid_n, then every
    cutoff pair f_i < f_j once as band pass and once as band stop.
    """
    if grid_n < 3:
        raise ValueError(f"grid_n must be >= 3, got {grid_n}")
    freqs = [k / grid_n for k in range(1, grid_n)]
    for taps in taps_list:
        for kind in (FilterKind.LOWPASS, FilterKind.HIGHPASS):
            for f1 in freqs:
                yield FilterSpec(kind=kind, taps=taps, f1=f1, window=window)
        for kind in (FilterKind.BANDPASS, FilterKind.BANDSTOP):
            for f1, f2 in itertools.combinations(freqs, 2):
                yield FilterSpec(kind=kind, taps=taps, f1=f1, f2=f2, window=window)


def sweep_taps(taps_min: int = 55, taps_max: int = 255) -> list[int]:
    """Odd taps counts covered by the population sweep."""
    return list(range(taps_min | 1, taps_max + 1, 2))
