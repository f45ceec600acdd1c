"""Minimal-pulse signed-digit recoding of integer weights.

An integer w is rewritten as w = sum(d_i * 2**i) with digits d_i in
{-1, 0, +1}.  The recoding used here is the non-adjacent form (NAF): no two
consecutive digits are nonzero, and the number of nonzero digits ("pulses")
is minimal over all signed-digit representations of w.  Each pulse costs one
add/subtract in a bit-layer accumulator, so pulse counts are the cost model
for everything downstream.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

# recode()/pulse_count() accept |value| below this
MAX_MAGNITUDE = 1 << 24

_STATS_CHUNK = 1 << 20


@dataclass(frozen=True)
class TritVector:
    """Signed-digit form of one integer; digits[i] carries weight 2**i."""

    digits: tuple[int, ...]

    @property
    def value(self) -> int:
        return sum(d << i for i, d in enumerate(self.digits))

    @property
    def pulses(self) -> int:
        return sum(1 for d in self.digits if d)

    def nonzeros(self) -> list[tuple[int, int]]:
        """(bit position, sign) of every pulse, lowest position first."""
        return [(i, d) for i, d in enumerate(self.digits) if d]


@dataclass(frozen=True)
class PulseStats:
    """Mean and maximum pulse count over all integers in [0, 2**n_bits)."""

    n_bits: int
    avg: float
    max: int


@dataclass(frozen=True)
class TwosComplementLayers:
    """Plain two's-complement bit rows of one integer.

    The top row (index n_bits - 1) is the sign layer: it contributes
    negatively when the rows are evaluated layer by layer.
    """

    bits: tuple[int, ...]
    n_bits: int

    @property
    def sign_layer(self) -> int:
        return self.n_bits - 1

    @property
    def value(self) -> int:
        v = sum(b << i for i, b in enumerate(self.bits[:-1]))
        return v - (self.bits[-1] << self.sign_layer)


def _check_range(value: int) -> int:
    value = int(value)
    if not -MAX_MAGNITUDE < value < MAX_MAGNITUDE:
        raise ValueError(f"value {value} out of range (|value| must be < 2**24)")
    return value


def recode(value: int) -> TritVector:
    """Recode an integer into its minimal-pulse signed-digit form.

    recode(-v) has the same pulse positions as recode(v) with every sign
    flipped, so positive and negative values cost the same number of adds.
    """
    v = _check_range(value)
    digits: list[int] = []
    while v:
        if v & 1:
            d = 2 - (v & 3)  # +1 when v % 4 == 1, -1 when v % 4 == 3
            digits.append(d)
            v -= d
        else:
            digits.append(0)
        v >>= 1
    return TritVector(tuple(digits))


def pulse_count(value: int) -> int:
    """Number of nonzero digits in recode(value)."""
    v = abs(_check_range(value))
    count = 0
    while v:
        if v & 1:
            count += 1
            v -= 2 - (v & 3)
        v >>= 1
    return count


def _pulse_counts_bulk(values: np.ndarray) -> np.ndarray:
    # nonzero NAF digits of v sit exactly at the set bits of v ^ 3v
    v = values.astype(np.uint64)
    return np.bitwise_count(v ^ (3 * v)).astype(np.int64)


def build_ntrits_table(n_bits: int = 16) -> np.ndarray:
    """Pulse-count lookup table indexed by absolute weight value.

    Entry k equals pulse_count(k) for k in [0, 2**(n_bits-1)).  Half the
    signed range suffices because the sign only flips pulse polarity, never
    the count.
    """
    if not 1 <= n_bits <= 17:
        raise ValueError(f"n_bits must be in [1, 17], got {n_bits}")
    return _pulse_counts_bulk(np.arange(1 << (n_bits - 1), dtype=np.uint64))


def pulse_stats(n_bits: int) -> PulseStats:
    """Mean and maximum pulse count over all integers in [0, 2**n_bits)."""
    if not 1 <= n_bits < 25:
        raise ValueError(f"n_bits must be in [1, 24], got {n_bits}")
    total = 0
    peak = 0
    n = 1 << n_bits
    for start in range(0, n, _STATS_CHUNK):
        counts = _pulse_counts_bulk(
            np.arange(start, min(start + _STATS_CHUNK, n), dtype=np.uint64)
        )
        total += int(counts.sum())
        peak = max(peak, int(counts.max()))
    return PulseStats(n_bits=n_bits, avg=total / n, max=peak)


def recode_twos_complement(value: int, n_bits: int) -> TwosComplementLayers:
    """Plain two's-complement rows of value, sign layer marked.

    Only used to model the naive negative-weight handling where the top bit
    layer is subtracted instead of added; the ternary recoding above replaces
    it everywhere that counts.
    """
    if n_bits < 1:
        raise ValueError("n_bits must be >= 1")
    value = int(value)
    lo, hi = -(1 << (n_bits - 1)), (1 << (n_bits - 1)) - 1
    if not lo <= value <= hi:
        raise ValueError(f"{value} not representable in {n_bits}-bit two's complement")
    u = value & ((1 << n_bits) - 1)
    bits = tuple((u >> i) & 1 for i in range(n_bits))
    return TwosComplementLayers(bits=bits, n_bits=n_bits)
