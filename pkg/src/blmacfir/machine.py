"""Cycle-accurate model of the run-length-driven dot-product machine.

The machine applies one odd-length symmetric FIR filter (127 taps by
default) to a sample shift register.  Weights live in a 256-byte memory as
packed run-length codes (see rlc); samples are signed 8-bit.  One run walks
the code stream once:

  pulse code  expand the zero run to position j, fetch samples j and
              taps-1-j, pre-add them (the centre tap fetches alone), then
              add or subtract the sum; one clock cycle.
  EOR code    shift the accumulator right one bit, collecting the outgoing
              bit in the result shift register; one clock cycle.

After the 16 layers the accumulator and the shift register concatenate to
the exact full-precision dot product: (acc << 16) | result_sr.  Nothing is
truncated or rounded.  The optional fuse_last_add mode retimes each layer's
final add into its shift cycle, saving one cycle per non-empty layer; the
arithmetic is unchanged.
"""

from __future__ import annotations

import statistics
from dataclasses import dataclass, replace
from typing import Callable, Iterable, Sequence

from .blmac import AccumulatorOverflow
from .quantize import QuantizedFilter
from .rlc import (
    EOR_BYTE,
    FILTER_LAYERS,
    SIGN_BIT,
    ZRUN_MAX,
    filter_memory_image,
)


class LoadError(ValueError):
    """Image does not fit the weight memory."""


class SampleRangeError(ValueError):
    """Sample outside the signed sample width."""


class StreamFormatError(ValueError):
    """Weight memory contents are not a well-formed code stream."""


@dataclass(frozen=True)
class MachineConfig:
    taps: int = 127
    sample_bits: int = 8
    weight_bits: int = 16
    code_capacity: int = 256
    acc_width: int = 17
    fuse_last_add: bool = False


@dataclass(frozen=True)
class CycleStats:
    """measure_cycles outcome over a filter population.

    Cycle figures cover the whole population; filters whose code stream
    exceeds the configured weight memory are timed with an enlarged memory
    and reported in n_over_capacity (they cannot run on the real machine).
    """

    n_filters: int
    n_over_capacity: int
    mean_cycles: float
    mean_cycles_loadable: float
    min_cycles: int
    max_cycles: int
    mean_cycles_fused: float

    @property
    def excluded_fraction(self) -> float:
        return self.n_over_capacity / self.n_filters if self.n_filters else 0.0


# decoded op: (j, mirror_j, sign) for a pulse, None for EOR
_Op = tuple[int, int, int] | None


class Machine:
    """One dot-product machine instance; mutable, single-threaded."""

    def __init__(self, config: MachineConfig = MachineConfig()):
        if config.taps < 1 or config.taps % 2 == 0:
            raise ValueError(f"taps must be odd, got {config.taps}")
        self.config = config
        self.weight_mem = b""
        self.sample_mem: list[int] = [0] * config.taps
        self.acc = 0
        self.result_sr = 0
        self.cycle_count = 0
        self._ops: list[_Op] | None = None
        self._pulse_cycles = 0  # cycles spent on pulse codes per run, fused mode
        lo = -(1 << (config.sample_bits - 1))
        hi = (1 << (config.sample_bits - 1)) - 1
        self._sample_range = (lo, hi)

    def load_weights(self, image: bytes) -> None:
        """Write the packed code image into the weight memory."""
        if len(image) > self.config.code_capacity:
            raise LoadError(
                f"{len(image)}-byte image exceeds the {self.config.code_capacity}-code weight memory"
            )
        self.weight_mem = bytes(image)
        self._ops = None

    def load_filter(self, filt: QuantizedFilter) -> None:
        """Encode a quantized symmetric filter and load its image."""
        if filt.taps != self.config.taps:
            raise LoadError(f"filter has {filt.taps} taps, machine is built for {self.config.taps}")
        self.load_weights(filter_memory_image(filt.half_coeffs(), capacity=None))

    def push_sample(self, x: int) -> None:
        """Shift one new sample in; the oldest drops out."""
        x = int(x)
        lo, hi = self._sample_range
        if not lo <= x <= hi:
            raise SampleRangeError(f"sample {x} outside [{lo}, {hi}]")
        self.sample_mem.pop(0)
        self.sample_mem.append(x)

    def _decode_ops(self) -> list[_Op]:
        taps = self.config.taps
        positions = taps // 2 + 1
        centre = taps // 2
        ops: list[_Op] = []
        pos = 0
        layers = 0
        pulse_cycles = 0
        run_pulses = 0
        for b in self.weight_mem:
            if layers >= FILTER_LAYERS:
                raise StreamFormatError("codes continue past the final layer")
            if b & EOR_BYTE:
                ops.append(None)
                layers += 1
                # fused timing: the layer's last add shares the shift cycle
                pulse_cycles += max(run_pulses - 1, 0) if self.config.fuse_last_add else run_pulses
                run_pulses = 0
                pos = 0
            else:
                j = pos + (b & ZRUN_MAX)
                if j >= positions:
                    raise StreamFormatError(f"pulse position {j} overflows {positions} positions in layer {layers}")
                mirror = -1 if j == centre else taps - 1 - j
                ops.append((j, mirror, -1 if b & SIGN_BIT else 1))
                pos = j + 1
                run_pulses += 1
        if layers != FILTER_LAYERS:
            raise StreamFormatError(f"image holds {layers} layers, expected {FILTER_LAYERS}")
        self._pulse_cycles = pulse_cycles
        return ops

    def run_once(self, trace: Callable[[str], None] | None = None) -> tuple[int, int]:
        """Apply the loaded filter to the current window.

        Returns (output, cycles).  The output equals the exact integer dot
        product of the full symmetric weight vector with the sample window.
        """
        if not self.weight_mem:
            raise StreamFormatError("no weights loaded")
        if self._ops is None:
            self._ops = self._decode_ops()
        window = self.sample_mem
        acc = 0
        bits = 0
        layer = 0
        cycle = 0
        acc_lo = -(1 << (self.config.acc_width - 1))
        acc_hi = (1 << (self.config.acc_width - 1)) - 1
        for op in self._ops:
            cycle += 1
            if op is None:
                bits |= (acc & 1) << layer
                if trace:
                    trace(f"{cycle},EOR,,,{acc}")
                acc >>= 1
                layer += 1
            else:
                j, mirror, sign = op
                fetched = window[j] + (window[mirror] if mirror >= 0 else 0)
                acc += sign * fetched
                if not acc_lo <= acc <= acc_hi:
                    raise AccumulatorOverflow(layer, acc, self.config.acc_width)
                if trace:
                    trace(f"{cycle},{'+' if sign > 0 else '-'},{j},{fetched},{acc}")
        if self.config.fuse_last_add:
            cycle = self._pulse_cycles + FILTER_LAYERS
        self.acc = acc
        self.result_sr = bits
        self.cycle_count += cycle
        return (acc << FILTER_LAYERS) | bits, cycle

    def stream(self, samples: Sequence[int]) -> list[int]:
        """Prime with taps-1 samples, then emit one output per further sample."""
        taps = self.config.taps
        if len(samples) < taps:
            raise ValueError(f"need at least {taps} samples, got {len(samples)}")
        for x in samples[: taps - 1]:
            self.push_sample(x)
        outputs = []
        for x in samples[taps - 1 :]:
            self.push_sample(x)
            outputs.append(self.run_once()[0])
        return outputs


def measure_cycles(
    filters: Iterable[QuantizedFilter],
    config: MachineConfig = MachineConfig(),
) -> CycleStats:
    """Cycle statistics of run_once over a filter population.

    Every filter is timed; those whose image exceeds config.code_capacity are
    run with an enlarged weight memory and counted as over capacity.
    """
    cycles: list[int] = []
    cycles_loadable: list[int] = []
    cycles_fused: list[int] = []
    over = 0
    for filt in filters:
        image = filter_memory_image(filt.half_coeffs(), capacity=None)
        loadable = len(image) <= config.code_capacity
        if not loadable:
            over += 1
        capacity = max(len(image), config.code_capacity)
        machine = Machine(replace(config, code_capacity=capacity, fuse_last_add=False))
        machine.load_weights(image)
        _, n = machine.run_once()
        fused = Machine(replace(config, code_capacity=capacity, fuse_last_add=True))
        fused.load_weights(image)
        _, n_fused = fused.run_once()
        cycles.append(n)
        cycles_fused.append(n_fused)
        if loadable:
            cycles_loadable.append(n)
    if not cycles:
        raise ValueError("empty filter population")
    return CycleStats(
        n_filters=len(cycles),
        n_over_capacity=over,
        mean_cycles=statistics.fmean(cycles),
        mean_cycles_loadable=statistics.fmean(cycles_loadable) if cycles_loadable else float("nan"),
        min_cycles=min(cycles),
        max_cycles=max(cycles),
        mean_cycles_fused=statistics.fmean(cycles_fused),
    )
