"""File format round trips and CLI subcommand behaviour."""

import numpy as np
import pytest

from blmacfir import FilterKind, FilterSpec, Window, design, quantize
from blmacfir.cli import main
from blmacfir.formats import (
    read_memory_image,
    read_quantized_filter,
    read_real_filter,
    read_samples,
    write_memory_image,
    write_quantized_filter,
    write_real_filter,
    write_samples,
)
from blmacfir.rlc import filter_memory_image


def test_real_filter_roundtrip(tmp_path):
    spec = FilterSpec(FilterKind.BANDPASS, 55, 0.25, 0.7, window=Window.kaiser(8.6))
    filt = design(spec)
    path = tmp_path / "f.txt"
    write_real_filter(filt, path)
    back = read_real_filter(path)
    assert back.spec == spec
    assert np.array_equal(back.coeffs, filt.coeffs)  # repr round trips exactly


def test_real_filter_header_variants(tmp_path):
    for spec in (
        FilterSpec(FilterKind.LOWPASS, 55, 0.5),
        FilterSpec(FilterKind.HIGHPASS, 127, 0.31, window=Window.kaiser(14.0)),
        FilterSpec(FilterKind.BANDSTOP, 55, 0.2, 0.6),
    ):
        path = tmp_path / "f.txt"
        write_real_filter(design(spec), path)
        assert read_real_filter(path).spec == spec


def test_quantized_filter_roundtrip(tmp_path):
    q = quantize(design(FilterSpec(FilterKind.LOWPASS, 55, 0.3)))
    path = tmp_path / "q.txt"
    write_quantized_filter(q, path)
    back = read_quantized_filter(path)
    assert back.scale_exp == q.scale_exp
    assert np.array_equal(back.coeffs, q.coeffs)
    assert path.read_text().splitlines()[0] == f"55 {q.scale_exp}"


def test_quantized_filter_header_mismatch(tmp_path):
    path = tmp_path / "bad.txt"
    path.write_text("3 15\n100\n200\n")
    with pytest.raises(ValueError):
        read_quantized_filter(path)


def test_memory_image_and_samples_roundtrip(tmp_path):
    q = quantize(design(FilterSpec(FilterKind.LOWPASS, 127, 0.3)))
    image = filter_memory_image(q.half_coeffs())
    path = tmp_path / "img.bin"
    write_memory_image(image, path)
    assert read_memory_image(path) == image
    samples = [-128, 0, 127, 5]
    write_samples(samples, tmp_path / "s.txt")
    assert read_samples(tmp_path / "s.txt") == samples


def test_cli_pipeline_end_to_end(tmp_path, capsys):
    real = tmp_path / "f.txt"
    quant = tmp_path / "q.txt"
    image = tmp_path / "img.bin"
    samples = tmp_path / "s.txt"

    assert main(["gen", "bandpass", "127", "0.25", "0.7", "--out", str(real)]) == 0
    assert main(["quantize", str(real), "--out", str(quant)]) == 0
    assert main(["encode", str(quant), "--out", str(image), "--disassemble"]) == 0

    rng = np.random.default_rng(17)
    data = [int(v) for v in rng.integers(-128, 128, size=126 + 10)]
    write_samples(data, samples)
    capsys.readouterr()
    assert main(["run", str(image), str(samples)]) == 0
    out = capsys.readouterr().out.splitlines()
    assert len(out) == 11
    assert out[-1].startswith("cycles_total ")

    q = read_quantized_filter(quant)
    ref = np.convolve(np.array(data, dtype=np.int64), q.coeffs)[126:136]
    assert [int(line) for line in out[:-1]] == [int(v) for v in ref]


def test_cli_table3(capsys):
    assert main(["table3", "--max-bits", "4"]) == 0
    out = capsys.readouterr().out.splitlines()
    assert out[0].split() == ["bits", "avg", "max"]
    assert out[1].split() == ["1", "0.50", "1"]
    assert out[4].split() == ["4", "1.75", "3"]


def test_cli_sweep_and_study(tmp_path, capsys):
    out_csv = tmp_path / "stats.csv"
    assert main([
        "sweep", "--window", "hamming", "--taps-min", "55", "--taps-max", "57",
        "--grid", "5", "--out", str(out_csv),
    ]) == 0
    lines = out_csv.read_text().splitlines()
    assert len(lines) == 3 and lines[1].startswith("hamming,55,20,")

    cycles_csv = tmp_path / "cycles.csv"
    assert main(["machine-study", "--grid", "4", "--out", str(cycles_csv)]) == 0
    assert cycles_csv.read_text().splitlines()[1].startswith("hamming,127,12,")


def test_cli_calibrate(capsys, tmp_path):
    out_csv = tmp_path / "cal.csv"
    assert main(["calibrate-kaiser", "--betas", "8.6", "--grid", "4", "--out", str(out_csv)]) == 0
    out = capsys.readouterr().out
    assert "best beta: 8.6" in out
    assert out_csv.read_text().startswith("beta,")


def test_cli_trace(tmp_path, capsys):
    quant = tmp_path / "q.txt"
    image = tmp_path / "img.bin"
    write_quantized_filter(quantize(design(FilterSpec(FilterKind.LOWPASS, 127, 0.5))), quant)
    main(["encode", str(quant), "--out", str(image)])
    samples = tmp_path / "s.txt"
    write_samples([1] * 127, samples)
    capsys.readouterr()
    assert main(["run", str(image), str(samples), "--trace"]) == 0
    out = capsys.readouterr().out
    assert "trace 1," in out
