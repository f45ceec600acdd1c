"""Bit-exact reference models of the bit-layer multiply accumulator.

A dot product sum(w_j * x_j) is evaluated one bit layer at a time: layer i
holds the nonzero signed digits d_ij of all weights at bit position i.  The
left-shift variant walks layers MSB to LSB, doubling the accumulator between
layers; the right-shift variant walks LSB to MSB, shifting the accumulator
right after each layer and emitting one finalized result bit per shift.
Both cost one add/subtract per pulse and agree exactly with the plain
multiply-accumulate oracle.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .sdr import pulse_count, recode, recode_twos_complement


class AccumulatorOverflow(ArithmeticError):
    """Accumulator left its declared signed width; never wrapped silently."""

    def __init__(self, layer: int, value: int, width: int):
        self.layer = layer
        self.value = value
        self.width = width
        super().__init__(
            f"accumulator value {value} exceeds signed {width}-bit range "
            f"while processing layer {layer}"
        )


@dataclass(frozen=True)
class LayerMatrix:
    """Sparse bit layers of a weight vector.

    layers[i] lists the (position, sign) pulses of bit layer i, ascending by
    position.  n_positions is the weight-vector length; positions range over
    [0, n_positions).
    """

    layers: tuple[tuple[tuple[int, int], ...], ...]
    n_positions: int

    @property
    def n_layers(self) -> int:
        return len(self.layers)

    @property
    def total_pulses(self) -> int:
        return sum(len(layer) for layer in self.layers)

    def weight(self, j: int) -> int:
        """Reconstruct weight j from its digits across all layers."""
        return sum(s << i for i, layer in enumerate(self.layers) for p, s in layer if p == j)

    def weights(self) -> list[int]:
        return [self.weight(j) for j in range(self.n_positions)]

    @classmethod
    def _from_digit_lists(cls, digit_lists, n_positions, n_layers):
        needed = max((i for digits in digit_lists for i, _ in digits), default=-1) + 1
        if n_layers is None:
            n_layers = needed
        elif needed > n_layers:
            raise ValueError(f"weights need {needed} layers, only {n_layers} available")
        layers: list[list[tuple[int, int]]] = [[] for _ in range(n_layers)]
        for j, digits in enumerate(digit_lists):
            for i, s in digits:
                layers[i].append((j, s))
        return cls(tuple(tuple(layer) for layer in layers), n_positions)

    @classmethod
    def from_weights(cls, weights: Sequence[int], n_layers: int | None = None) -> "LayerMatrix":
        """Minimal-pulse ternary layers of a signed weight vector."""
        digit_lists = [recode(int(w)).nonzeros() for w in weights]
        return cls._from_digit_lists(digit_lists, len(weights), n_layers)

    @classmethod
    def from_binary_weights(cls, weights: Sequence[int], n_layers: int | None = None) -> "LayerMatrix":
        """Plain binary layers; weights must be non-negative."""
        digit_lists = []
        for w in weights:
            w = int(w)
            if w < 0:
                raise ValueError("plain binary layers require non-negative weights")
            digit_lists.append([(i, 1) for i in range(w.bit_length()) if (w >> i) & 1])
        return cls._from_digit_lists(digit_lists, len(weights), n_layers)

    @classmethod
    def from_twos_complement(cls, weights: Sequence[int], n_bits: int) -> "LayerMatrix":
        """Two's-complement layers: the top (sign) layer pulses carry -1."""
        digit_lists = []
        for w in weights:
            rows = recode_twos_complement(int(w), n_bits)
            digits = [(i, 1) for i in range(n_bits - 1) if rows.bits[i]]
            if rows.bits[n_bits - 1]:
                digits.append((rows.sign_layer, -1))
            digit_lists.append(digits)
        return cls._from_digit_lists(digit_lists, len(weights), n_bits)


@dataclass(frozen=True)
class LeftShiftRun:
    """blmac_left outcome; layer_trace[k] is the accumulator after the k-th
    processed layer (MSB layer first)."""

    result: int
    adds: int
    shifts: int
    layer_trace: tuple[int, ...]


@dataclass(frozen=True)
class RightShiftRun:
    """blmac_right outcome; emitted_bits[i] is bit i of the final result,
    layer_trace[i] is the accumulator after layer i's pulses, before its
    shift."""

    result: int
    emitted_bits: tuple[int, ...]
    adds: int
    shifts: int
    layer_trace: tuple[int, ...]


def mac_oracle(weights: Sequence[int], samples: Sequence[int]) -> int:
    """Ground truth: exact sum(w_j * x_j) in unbounded integer arithmetic."""
    if len(weights) != len(samples):
        raise ValueError(f"length mismatch: {len(weights)} weights vs {len(samples)} samples")
    return sum(int(w) * int(x) for w, x in zip(weights, samples))


def _fetch(samples: Sequence[int], j: int, n_positions: int) -> int:
    if not 0 <= j < n_positions or j >= len(samples):
        raise IndexError(f"pulse position {j} out of range")
    return int(samples[j])


def blmac_left(matrix: LayerMatrix, samples: Sequence[int]) -> LeftShiftRun:
    """Evaluate layers MSB to LSB, doubling the accumulator between layers."""
    acc = 0
    adds = 0
    shifts = 0
    trace: list[int] = []
    for i in reversed(range(matrix.n_layers)):
        if trace:
            acc <<= 1
            shifts += 1
        for j, s in matrix.layers[i]:
            acc += s * _fetch(samples, j, matrix.n_positions)
            adds += 1
        trace.append(acc)
    return LeftShiftRun(result=acc, adds=adds, shifts=shifts, layer_trace=tuple(trace))


def blmac_right(
    matrix: LayerMatrix,
    samples: Sequence[int],
    acc_width: int | None = None,
) -> RightShiftRun:
    """Evaluate layers LSB to MSB with a right shift after every layer.

    Each shift emits the accumulator LSB, which is already bit i of the final
    result; the result is reassembled as (acc << n_layers) | emitted bits.
    When acc_width is given, the accumulator is checked against that signed
    width after every add and the offending layer is reported on overflow.
    """
    lo = hi = 0
    if acc_width is not None:
        lo, hi = -(1 << (acc_width - 1)), (1 << (acc_width - 1)) - 1
    acc = 0
    adds = 0
    bits: list[int] = []
    trace: list[int] = []
    for i, layer in enumerate(matrix.layers):
        for j, s in layer:
            acc += s * _fetch(samples, j, matrix.n_positions)
            adds += 1
            if acc_width is not None and not lo <= acc <= hi:
                raise AccumulatorOverflow(i, acc, acc_width)
        trace.append(acc)
        bits.append(acc & 1)
        acc >>= 1
    packed = sum(b << i for i, b in enumerate(bits))
    return RightShiftRun(
        result=(acc << matrix.n_layers) | packed,
        emitted_bits=tuple(bits),
        adds=adds,
        shifts=matrix.n_layers,
        layer_trace=tuple(trace),
    )


def symmetric_preadd(samples: Sequence[int]) -> tuple[tuple[int, ...], int]:
    """Fold an odd-length window for a symmetric filter.

    folded[j] = x_j + x_{N-1-j} for j < N//2; the centre sample stays
    unpaired.  Returns (folded, number of pre-adds performed).
    """
    n = len(samples)
    if n % 2 == 0:
        raise ValueError(f"window length must be odd, got {n}")
    half = n // 2
    folded = tuple(int(samples[j]) + int(samples[n - 1 - j]) for j in range(half))
    return folded + (int(samples[half]),), half


def count_filter_additions(half_weights: Iterable[int], taps: int) -> int:
    """Total additions to apply one symmetric odd-length filter.

    taps//2 pre-adds for the symmetric fold, plus one add per pulse of each
    half-vector coefficient.
    """
    half_weights = [int(w) for w in half_weights]
    if len(half_weights) != taps // 2 + 1:
        raise ValueError(
            f"expected {taps // 2 + 1} half-vector coefficients for {taps} taps, "
            f"got {len(half_weights)}"
        )
    return taps // 2 + sum(pulse_count(w) for w in half_weights)
