"""Text and binary interchange formats.

Real filter file:       header "kind taps f1 [f2] window [beta]", then one
                        full-precision coefficient per line.
Quantized filter file:  header "taps scale_exp", then one signed integer
                        coefficient per line; this is the bit-exact artifact.
Memory image file:      the raw packed code bytes.
Sample file:            one signed decimal sample per line.
"""

from __future__ import annotations

from pathlib import Path

import numpy as np

from .firdesign import FilterKind, FilterSpec, RealFilter, Window
from .quantize import QuantizedFilter


def _spec_header(spec: FilterSpec) -> str:
    parts = [spec.kind.value, str(spec.taps), repr(spec.f1)]
    if spec.f2 is not None:
        parts.append(repr(spec.f2))
    parts.append(spec.window.kind)
    if spec.window.kind == "kaiser":
        parts.append(repr(spec.window.beta))
    return " ".join(parts)


def _parse_spec_header(line: str) -> FilterSpec:
    fields = line.split()
    try:
        kind = FilterKind(fields[0])
        taps = int(fields[1])
        f1 = float(fields[2])
        rest = fields[3:]
        f2 = None
        if kind.is_band:
            f2 = float(rest[0])
            rest = rest[1:]
        window = Window.kaiser(float(rest[1])) if rest[0] == "kaiser" else Window.hamming()
    except (IndexError, ValueError) as exc:
        raise ValueError(f"bad filter header {line!r}") from exc
    return FilterSpec(kind=kind, taps=taps, f1=f1, f2=f2, window=window)


def write_real_filter(filt: RealFilter, path: str | Path) -> None:
    lines = [_spec_header(filt.spec)]
    lines += [repr(float(c)) for c in filt.coeffs]
    Path(path).write_text("\n".join(lines) + "\n")


def read_real_filter(path: str | Path) -> RealFilter:
    lines = Path(path).read_text().splitlines()
    spec = _parse_spec_header(lines[0])
    coeffs = np.array([float(line) for line in lines[1:] if line.strip()])
    if len(coeffs) != spec.taps:
        raise ValueError(f"header says {spec.taps} taps, file holds {len(coeffs)} coefficients")
    return RealFilter(coeffs=coeffs, spec=spec)


def write_quantized_filter(filt: QuantizedFilter, path: str | Path) -> None:
    lines = [f"{filt.taps} {filt.scale_exp}"]
    lines += [str(int(c)) for c in filt.coeffs]
    Path(path).write_text("\n".join(lines) + "\n")


def read_quantized_filter(path: str | Path) -> QuantizedFilter:
    lines = Path(path).read_text().splitlines()
    try:
        taps, scale_exp = (int(v) for v in lines[0].split())
    except ValueError as exc:
        raise ValueError(f"bad quantized filter header {lines[0]!r}") from exc
    coeffs = np.array([int(line) for line in lines[1:] if line.strip()], dtype=np.int64)
    if len(coeffs) != taps:
        raise ValueError(f"header says {taps} taps, file holds {len(coeffs)} coefficients")
    return QuantizedFilter(coeffs=coeffs, scale_exp=scale_exp)


def write_memory_image(image: bytes, path: str | Path) -> None:
    Path(path).write_bytes(image)


def read_memory_image(path: str | Path) -> bytes:
    return Path(path).read_bytes()


def read_samples(path: str | Path) -> list[int]:
    return [int(line) for line in Path(path).read_text().splitlines() if line.strip()]


def write_samples(samples, path: str | Path) -> None:
    Path(path).write_text("\n".join(str(int(x)) for x in samples) + "\n")
