"""Command line front end.

Subcommands: table3, gen, quantize, encode, run, sweep, machine-study,
calibrate-kaiser.  See README for the file formats involved.
"""

from __future__ import annotations

import argparse
import sys

from . import bench, formats, machine, rlc, sdr
from .firdesign import DEFAULT_KAISER_BETA, FilterKind, FilterSpec, Window, design, sweep_taps
from .quantize import quantize


def _window_from_args(args) -> Window:
    if args.window == "kaiser":
        return Window.kaiser(args.beta)
    return Window.hamming()


def _cmd_table3(args) -> int:
    print("bits  avg   max")
    for n in range(1, args.max_bits + 1):
        stats = sdr.pulse_stats(n)
        print(f"{stats.n_bits:4d}  {stats.avg:.2f}  {stats.max:3d}")
    return 0


def _cmd_gen(args) -> int:
    spec = FilterSpec(
        kind=FilterKind(args.kind),
        taps=args.taps,
        f1=args.f1,
        f2=args.f2,
        window=_window_from_args(args),
    )
    filt = design(spec)
    formats.write_real_filter(filt, args.out)
    print(f"wrote {spec.taps}-tap {spec.kind.value} filter to {args.out}")
    return 0


def _cmd_quantize(args) -> int:
    filt = formats.read_real_filter(args.infile)
    q = quantize(filt)
    formats.write_quantized_filter(q, args.out)
    print(f"wrote {q.taps} coefficients, scale exponent {q.scale_exp}, to {args.out}")
    return 0


def _cmd_encode(args) -> int:
    q = formats.read_quantized_filter(args.infile)
    image = rlc.filter_memory_image(q.half_coeffs())
    formats.write_memory_image(image, args.out)
    print(f"wrote {len(image)}-code image to {args.out}")
    if args.disassemble:
        print(rlc.disassemble(rlc.unpack_memory_image(image)))
    return 0


def _cmd_run(args) -> int:
    image = formats.read_memory_image(args.image)
    samples = formats.read_samples(args.samples)
    taps = args.taps
    if len(samples) < taps:
        print(f"need at least {taps} samples to produce an output, got {len(samples)}", file=sys.stderr)
        return 2
    m = machine.Machine(machine.MachineConfig(taps=taps))
    m.load_weights(image)
    trace = (lambda line: print(f"trace {line}")) if args.trace else None
    for x in samples[: taps - 1]:
        m.push_sample(x)
    n_outputs = 0
    for x in samples[taps - 1 :]:
        m.push_sample(x)
        output, _ = m.run_once(trace=trace)
        print(output)
        n_outputs += 1
    mean = m.cycle_count / n_outputs if n_outputs else 0.0
    print(f"cycles_total {m.cycle_count} cycles_mean {mean:.4f}")
    return 0


def _cmd_sweep(args) -> int:
    window = _window_from_args(args)
    taps_list = sweep_taps(args.taps_min, args.taps_max)
    stats = bench.run_sweep(window, taps_list, args.grid)
    bench.write_sweep_csv(stats, args.out)
    print(f"wrote {len(stats)} rows to {args.out}")
    return 0


def _cmd_machine_study(args) -> int:
    window = _window_from_args(args)
    stats = bench.machine_study(window, args.taps, args.grid)
    bench.write_cycles_csv(stats, window, args.taps, args.out)
    print(
        f"{stats.n_filters} filters, {stats.n_over_capacity} over capacity "
        f"({stats.excluded_fraction:.1%}); mean cycles {stats.mean_cycles:.1f} "
        f"(loadable only {stats.mean_cycles_loadable:.1f}, fused {stats.mean_cycles_fused:.1f})"
    )
    return 0


def _cmd_calibrate_kaiser(args) -> int:
    betas = [float(b) for b in args.betas.split(",")]
    rows = bench.calibrate_kaiser(betas, args.grid)
    if args.out:
        bench.write_calibration_csv(rows, args.out)
    print("beta   mean_adds_55  mean_adds_255  worst_error")
    for r in rows:
        print(f"{r.beta:<6g} {r.mean_adds[55]:>12.1f} {r.mean_adds[255]:>14.1f} {r.worst_error:>11.2%}")
    best = min(rows, key=lambda r: r.worst_error)
    print(f"best beta: {best.beta:g}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="blmacfir",
        description="Multiplierless FIR filtering with bit-layer accumulators",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("table3", help="average/maximum pulse counts per bit width")
    p.add_argument("--max-bits", type=int, default=16, choices=range(1, 25), metavar="N")
    p.set_defaults(func=_cmd_table3)

    p = sub.add_parser("gen", help="design one filter and write its coefficients")
    p.add_argument("kind", choices=[k.value for k in FilterKind])
    p.add_argument("taps", type=int)
    p.add_argument("f1", type=float)
    p.add_argument("f2", type=float, nargs="?", default=None)
    p.add_argument("--window", choices=["hamming", "kaiser"], default="hamming")
    p.add_argument("--beta", type=float, default=DEFAULT_KAISER_BETA)
    p.add_argument("--out", required=True)
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("quantize", help="quantize a real filter file to 16-bit integers")
    p.add_argument("infile")
    p.add_argument("--out", required=True)
    p.set_defaults(func=_cmd_quantize)

    p = sub.add_parser("encode", help="pack a quantized filter into a weight-memory image")
    p.add_argument("infile")
    p.add_argument("--out", required=True)
    p.add_argument("--disassemble", action="store_true")
    p.set_defaults(func=_cmd_encode)

    p = sub.add_parser("run", help="run the machine over a sample file")
    p.add_argument("image")
    p.add_argument("samples")
    p.add_argument("--taps", type=int, default=127)
    p.add_argument("--trace", action="store_true")
    p.set_defaults(func=_cmd_run)

    p = sub.add_parser("sweep", help="addition statistics over the cutoff-grid population")
    p.add_argument("--window", choices=["hamming", "kaiser"], default="hamming")
    p.add_argument("--beta", type=float, default=DEFAULT_KAISER_BETA)
    p.add_argument("--taps-min", type=int, default=55)
    p.add_argument("--taps-max", type=int, default=255)
    p.add_argument("--grid", type=int, default=100)
    p.add_argument("--out", required=True)
    p.set_defaults(func=_cmd_sweep)

    p = sub.add_parser("machine-study", help="cycle statistics of the dot-product machine")
    p.add_argument("--window", choices=["hamming", "kaiser"], default="hamming")
    p.add_argument("--beta", type=float, default=DEFAULT_KAISER_BETA)
    p.add_argument("--taps", type=int, default=127)
    p.add_argument("--grid", type=int, default=100)
    p.add_argument("--out", required=True)
    p.set_defaults(func=_cmd_machine_study)

    p = sub.add_parser("calibrate-kaiser", help="score Kaiser beta candidates on the sweep endpoints")
    p.add_argument("--betas", default="5,8.6,14")
    p.add_argument("--grid", type=int, default=100)
    p.add_argument("--out", default=None)
    p.set_defaults(func=_cmd_calibrate_kaiser)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
