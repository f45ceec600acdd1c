"""Quantization of real filter coefficients to signed 16-bit integers.

Coefficients are scaled by the largest power of two such that every rounded
value still fits in [-32767, 32767], then rounded half-to-even.  The scale
search tests the rounded magnitudes, not the raw reals, since rounding can
push a borderline value over the limit.  -32768 is excluded so that every
|coefficient| indexes the 2**15-entry pulse-count table.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .firdesign import FilterSpec, RealFilter

COEFF_LIMIT = 32767


class DegenerateFilterError(ValueError):
    """All-zero coefficient vector: no scale exists."""


def convergent_round(x: float) -> int:
    """Nearest integer, exact halves to the even neighbour."""
    if not abs(x) < 2**31:
        raise ValueError(f"|{x}| too large to round safely")
    return int(round(float(x)))


@dataclass(frozen=True, eq=False)
class QuantizedFilter:
    """Integer coefficients plus the power-of-two exponent that produced them:
    coeffs[j] == convergent_round(real[j] * 2**scale_exp)."""

    coeffs: np.ndarray
    scale_exp: int
    spec: FilterSpec | None = None

    @property
    def taps(self) -> int:
        return len(self.coeffs)

    def half_coeffs(self) -> np.ndarray:
        """First taps//2 + 1 coefficients; with symmetric filters, all of them."""
        return self.coeffs[: self.taps // 2 + 1]


def _fits(coeffs: np.ndarray, exponent: int) -> bool:
    return np.max(np.abs(np.rint(coeffs * 2.0**exponent))) <= COEFF_LIMIT


def quantize(filt: RealFilter | np.ndarray) -> QuantizedFilter:
    """Quantize real coefficients at the largest power-of-two scale that fits.

    Accepts a designed RealFilter or a bare coefficient vector.  The returned
    exponent is maximal: one step higher would push some rounded magnitude
    past 32767.
    """
    spec = None
    if isinstance(filt, RealFilter):
        spec = filt.spec
        coeffs = filt.coeffs
    else:
        coeffs = np.asarray(filt, dtype=float)
    if coeffs.ndim != 1 or len(coeffs) == 0:
        raise ValueError("expected a non-empty coefficient vector")
    peak = np.max(np.abs(coeffs))
    if peak == 0.0:
        raise DegenerateFilterError("all coefficients are zero")

    # start where peak * 2**e lands in [2**14, 2**15), then settle on the
    # rounded values; both loops run at most a couple of steps
    exponent = 15 - np.frexp(peak)[1]
    while _fits(coeffs, exponent + 1):
        exponent += 1
    while not _fits(coeffs, exponent):
        exponent -= 1
    quantized = np.rint(coeffs * 2.0**exponent).astype(np.int64)
    return QuantizedFilter(coeffs=quantized, scale_exp=int(exponent), spec=spec)
