"""Run-length coding of sparse bit layers and the packed weight-memory image.

Each bit layer becomes a sequence of (sign, zero-run) pulse codes terminated
by an end-of-run (EOR) code; an empty layer is a lone EOR.  The position
pointer restarts at 0 on every layer, advances by zrun to reach a pulse and
by one past it.  Layers are emitted LSB first, the order the right-shift
accumulator consumes them.

Packed byte layout (one code per byte):
    bit 7      EOR flag (1 = EOR, remaining bits written 0)
    bit 6      pulse sign (0 = +1, 1 = -1)
    bits 5..0  zero run, 0..63

The image fits a 256-byte weight memory; streams that need more codes are
rejected at pack time.
"""

from __future__ import annotations

from dataclasses import dataclass

from .blmac import LayerMatrix

ZRUN_MAX = 63
IMAGE_CAPACITY = 256
EOR_BYTE = 0x80
SIGN_BIT = 0x40

FILTER_LAYERS = 16  # quantized 16-bit weights always span layers 0..15


class EncodingError(ValueError):
    """Layer gap too wide for the zrun field."""


class CapacityError(ValueError):
    """Code stream does not fit the weight memory."""


class DecodeError(ValueError):
    """Malformed code stream."""


@dataclass(frozen=True)
class Pulse:
    sign: int
    zrun: int

    def __str__(self) -> str:
        return f"{'+' if self.sign > 0 else '-'}{self.zrun}"


class _Eor:
    __slots__ = ()

    def __repr__(self) -> str:
        return "EOR"


EOR = _Eor()

Code = Pulse | _Eor


@dataclass(frozen=True)
class CodeStream:
    codes: tuple[Code, ...]
    n_layers: int

    def __len__(self) -> int:
        return len(self.codes)


def encode(matrix: LayerMatrix, positions: int) -> CodeStream:
    """Run-length encode every layer of the matrix, LSB layer first."""
    codes: list[Code] = []
    for i, layer in enumerate(matrix.layers):
        pos = 0
        for j, sign in sorted(layer):
            if not pos <= j < positions:
                raise EncodingError(f"pulse position {j} invalid in layer {i} (pos={pos}, positions={positions})")
            zrun = j - pos
            if zrun > ZRUN_MAX:
                raise EncodingError(f"zero run {zrun} exceeds {ZRUN_MAX} in layer {i}")
            codes.append(Pulse(sign=sign, zrun=zrun))
            pos = j + 1
        codes.append(EOR)
    return CodeStream(codes=tuple(codes), n_layers=matrix.n_layers)


def decode(stream: CodeStream, positions: int) -> LayerMatrix:
    """Exact inverse of encode."""
    layers: list[tuple[tuple[int, int], ...]] = []
    current: list[tuple[int, int]] = []
    pos = 0
    for code in stream.codes:
        if isinstance(code, Pulse):
            j = pos + code.zrun
            if j >= positions:
                raise DecodeError(f"pulse position {j} overflows {positions} positions in layer {len(layers)}")
            current.append((j, code.sign))
            pos = j + 1
        else:
            layers.append(tuple(current))
            current = []
            pos = 0
    if current or len(layers) != stream.n_layers:
        raise DecodeError(f"truncated stream: {len(layers)} complete layers, expected {stream.n_layers}")
    return LayerMatrix(layers=tuple(layers), n_positions=positions)


def pack_memory_image(stream: CodeStream, capacity: int | None = IMAGE_CAPACITY) -> bytes:
    """One byte per code, stream order; capacity=None lifts the memory limit."""
    if capacity is not None and len(stream.codes) > capacity:
        raise CapacityError(f"{len(stream.codes)} codes exceed the {capacity}-code weight memory")
    out = bytearray()
    for code in stream.codes:
        if isinstance(code, Pulse):
            if code.sign not in (1, -1) or not 0 <= code.zrun <= ZRUN_MAX:
                raise EncodingError(f"unpackable code {code}")
            out.append((SIGN_BIT if code.sign < 0 else 0) | code.zrun)
        else:
            out.append(EOR_BYTE)
    return bytes(out)


def unpack_memory_image(image: bytes) -> CodeStream:
    """Exact inverse of pack_memory_image; layer count = number of EOR bytes."""
    codes: list[Code] = []
    n_layers = 0
    for b in image:
        if b & EOR_BYTE:
            codes.append(EOR)
            n_layers += 1
        else:
            codes.append(Pulse(sign=-1 if b & SIGN_BIT else 1, zrun=b & ZRUN_MAX))
    return CodeStream(codes=tuple(codes), n_layers=n_layers)


def filter_memory_image(half_weights, capacity: int | None = IMAGE_CAPACITY) -> bytes:
    """Weight-memory image for one symmetric filter's half-coefficient vector."""
    matrix = LayerMatrix.from_weights([int(w) for w in half_weights], n_layers=FILTER_LAYERS)
    return pack_memory_image(encode(matrix, positions=matrix.n_positions), capacity)


def disassemble(stream: CodeStream) -> str:
    """Human-readable listing, one line per layer: 'L3: +5 -0 EOR'."""
    lines = []
    layer = 0
    parts: list[str] = []
    for code in stream.codes:
        parts.append(str(code) if isinstance(code, Pulse) else "EOR")
        if not isinstance(code, Pulse):
            lines.append(f"L{layer}: " + " ".join(parts))
            layer += 1
            parts = []
    if parts:
        lines.append(f"L{layer}: " + " ".join(parts) + " <truncated>")
    return "\n".join(lines)
