"""Multiplierless FIR filtering with bit-layer accumulators.

Pipeline: design a symmetric windowed-sinc filter, quantize it to 16-bit
integers at the largest power-of-two scale, recode the coefficients into
minimal-pulse signed digits, run-length pack the bit layers, and apply the
filter with only adds, subtracts and shifts; a cycle-accurate machine model
measures what the hardware would take.
"""

from .blmac import (
    AccumulatorOverflow,
    LayerMatrix,
    blmac_left,
    blmac_right,
    count_filter_additions,
    mac_oracle,
    symmetric_preadd,
)
from .firdesign import (
    DEFAULT_KAISER_BETA,
    FilterKind,
    FilterSpec,
    RealFilter,
    Window,
    design,
    frequency_response,
    sweep,
)
from .machine import CycleStats, Machine, MachineConfig, measure_cycles
from .quantize import QuantizedFilter, convergent_round, quantize
from .rlc import (
    EOR,
    CodeStream,
    Pulse,
    decode,
    disassemble,
    encode,
    filter_memory_image,
    pack_memory_image,
    unpack_memory_image,
)
from .sdr import (
    PulseStats,
    TritVector,
    build_ntrits_table,
    pulse_count,
    pulse_stats,
    recode,
    recode_twos_complement,
)

__all__ = [
    "AccumulatorOverflow",
    "CodeStream",
    "CycleStats",
    "DEFAULT_KAISER_BETA",
    "EOR",
    "FilterKind",
    "FilterSpec",
    "LayerMatrix",
    "Machine",
    "MachineConfig",
    "Pulse",
    "PulseStats",
    "QuantizedFilter",
    "RealFilter",
    "TritVector",
    "Window",
    "blmac_left",
    "blmac_right",
    "build_ntrits_table",
    "convergent_round",
    "count_filter_additions",
    "decode",
    "design",
    "disassemble",
    "encode",
    "filter_memory_image",
    "frequency_response",
    "mac_oracle",
    "measure_cycles",
    "pack_memory_image",
    "pulse_count",
    "pulse_stats",
    "quantize",
    "recode",
    "recode_twos_complement",
    "sweep",
    "symmetric_preadd",
    "unpack_memory_image",
]

__version__ = "0.1.0"
