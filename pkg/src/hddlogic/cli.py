"""Command-line front end (``hddlogic``)."""
from __future__ import annotations

import argparse
import math
import sys

from . import medium as med
from .channel import Track, TrainSpec, read_ideal, run_superimposition
from .detector import DetectMode, detect_peaks, format_flags, window_flags
from .drive import (DriveGeometry, Head, VirtualDrive, load_track, parse_program, rotations_for_op,
                    run_program, save_track, throughput_bits_per_second)
from .encode import Polarity, Word
from .errors import HddLogicError
from .logic import Gate, LogicConfig, adder, decode_track, run_gate

GATE_NAMES = [g.value for g in Gate]


def _word(text):
    try:
        return Word.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _positive(kind):
    def parse(text):
        value = kind(text)
        if value <= 0:
            raise argparse.ArgumentTypeError(f"must be positive: {text}")
        return value
    return parse


def _grid(text):
    try:
        values = [float(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad grid: {text!r}")
    if not values or any(not 0.0 <= v <= 1.0 for v in values):
        raise argparse.ArgumentTypeError("grid values must lie in [0, 1]")
    return values


def _common():
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--guard", type=_positive(int), default=1, metavar="G",
                   help="baseline half-cells after each pulse (default 1)")
    p.add_argument("--medium", choices=["longitudinal", "perpendicular"], default="longitudinal")
    p.add_argument("--hk1", type=_positive(float), default=1.0)
    p.add_argument("--hk2", type=_positive(float), default=0.5)
    p.add_argument("--mc", action="store_true", help="Monte Carlo particle ensembles per cell")
    p.add_argument("--particles", type=_positive(int), default=10_000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--head", choices=[h.value for h in Head], default="standard")
    p.add_argument("--theta-low", type=_positive(float), default=0.5)
    p.add_argument("--theta-high", type=_positive(float), default=1.5)
    p.add_argument("--verbose", "-v", action="store_true")
    return p


def build_parser():
    common = _common()
    parser = argparse.ArgumentParser(
        prog="hddlogic", description="Logic on a simulated hard-disk track.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gate", parents=[common], help="run one logic gate")
    p.add_argument("name", choices=GATE_NAMES)
    p.add_argument("a", type=_word)
    p.add_argument("b", type=_word, nargs="?")

    p = sub.add_parser("add", parents=[common], help="add two binary numbers")
    p.add_argument("a", type=_word)
    p.add_argument("b", type=_word)

    p = sub.add_parser("physics-sweep", help="remanence after an opposed pass: closed form vs Monte Carlo")
    p.add_argument("--grid", type=_grid, default=[round(0.1 * i, 1) for i in range(11)],
                   help="comma-separated h2 values in [0, 1]")
    p.add_argument("--particles", type=_positive(int), default=10**6)
    p.add_argument("--seed", type=int, default=12345)

    p = sub.add_parser("throughput", help="bit operations per second")
    p.add_argument("--rps", type=_positive(float), default=100)
    p.add_argument("--bits", type=_positive(int), default=10**6)
    p.add_argument("--head", choices=[h.value for h in Head], default="tandem")
    p.add_argument("--exact", action="store_true", help="also print the exact rational")

    p = sub.add_parser("track", help="save, load or show track images")
    tsub = p.add_subparsers(dest="action", required=True)
    s = tsub.add_parser("save", parents=[common], help="superimpose A and B and save the track")
    s.add_argument("path")
    s.add_argument("a", type=_word)
    s.add_argument("b", type=_word)
    s.add_argument("--negative", action="store_true", help="write B as a negative pulse train")
    s = tsub.add_parser("load", parents=[common], help="decode a saved track")
    s.add_argument("path")
    s.add_argument("--mode", choices=[m.value for m in DetectMode], default="any")
    s = tsub.add_parser("show", help="print a saved track's profile")
    s.add_argument("path")

    p = sub.add_parser("run", parents=[common], help="run a program file of gate/add commands")
    p.add_argument("program")
    return parser


def _config(args) -> LogicConfig:
    if args.medium == "perpendicular":
        medium = med.PerpendicularMedium(args.hk1, args.hk2)
    elif args.mc:
        medium = med.LongitudinalMedium(mode=med.Mode.MONTE_CARLO,
                                        particles_per_cell=args.particles, seed=args.seed)
    else:
        medium = med.LongitudinalMedium()
    return LogicConfig(medium, args.guard, args.theta_low, args.theta_high)


def _print_profile(track: Track, out):
    for i, v in enumerate(track.cells):
        out.write(f"{i} {v:g}\n")


def _print_peaks(events, out):
    for e in events:
        out.write(f"peak {e.boundary_index} {e.amplitude:+g} {e.peak_class.name}\n")


def cmd_gate(args, out):
    config = _config(args)
    gate = Gate(args.name)
    if gate.arity == 2 and args.b is None:
        raise HddLogicError(f"{gate.value} needs two operands")
    if gate.arity == 1 and args.b is not None:
        raise HddLogicError(f"{gate.value} takes one operand")
    result = run_gate(gate, args.a, args.b, config)
    out.write(f"{result.word}\n")
    if args.verbose:
        _print_profile(result.track, out)
        _print_peaks(result.events, out)
        rot = rotations_for_op(args.head, gate.composed)
        out.write(f"rotations {rot}\n")


def cmd_add(args, out):
    result = adder(args.a, args.b, _config(args))
    out.write(f"{result.word}\n")
    out.write(f"iterations {result.iterations}\n")
    if args.verbose:
        out.write(f"rotations {rotations_for_op(args.head) * result.elementary_ops}\n")


def sweep_rows(grid, particles, seed):
    """Rows of (h2, closed-form remanence, Monte Carlo remanence, |error|)."""
    base = med.sample_ensemble(particles, seed)
    rows = []
    for h2 in grid:
        analytic = med.remanence_after_opposed(h2)
        mc = med.net_magnetization(med.apply_field(base, h2, -1))
        rows.append((h2, analytic, mc, abs(mc - analytic)))
    return rows


def cmd_physics_sweep(args, out):
    rows = sweep_rows(args.grid, args.particles, args.seed)
    h0 = med.balanced_field()
    nearest = min(range(len(rows)), key=lambda i: abs(rows[i][0] - h0))
    out.write(f"{'h2':>8} {'analytic':>10} {'monte_carlo':>12} {'abs_error':>10}\n")
    for i, (h2, a, m, err) in enumerate(rows):
        mark = "  <- zero crossing" if i == nearest else ""
        out.write(f"{h2:8.4f} {a + 0.0:10.3f} {m + 0.0:12.3f} {err:10.4f}{mark}\n")
    out.write(f"balanced field h2 = {h0:.6f}\n")


def cmd_throughput(args, out):
    rate = throughput_bits_per_second(DriveGeometry(args.rps, args.bits, Head(args.head)))
    out.write(f"{math.floor(rate)}\n")
    if args.exact:
        out.write(f"{rate}\n")


def cmd_track(args, out):
    if args.action == "save":
        config = _config(args)
        polarity = Polarity.NEGATIVE if args.negative else Polarity.POSITIVE
        track, _ = run_superimposition(config.medium, args.a, TrainSpec(Polarity.POSITIVE, config.g),
                                       args.b, TrainSpec(polarity, config.g))
        save_track(track, args.path)
        out.write(f"saved {track.n_cells} half-cells to {args.path}\n")
    elif args.action == "load":
        track = load_track(args.path)
        config = _config(args)
        word, _ = decode_track(track, read_ideal(track), DetectMode(args.mode), config)
        out.write(f"{word}\n")
    else:
        track = load_track(args.path)
        signal = read_ideal(track)
        events = detect_peaks(signal)
        out.write(f"g {track.g} cells {track.n_cells} bits {track.bit_count}\n")
        for p in track.pass_log:
            out.write(f"pass {p.amplitude:.6g} {p.polarity}\n")
        _print_profile(track, out)
        _print_peaks(events, out)
        for mode in DetectMode:
            flags = window_flags(events, track.bit_count, track.g, mode)
            out.write(f"flags {mode.value} {format_flags(flags)}\n")


def cmd_run(args, out):
    with open(args.program) as fh:
        steps = parse_program(fh.read())
    drive = VirtualDrive(DriveGeometry(head=Head(args.head)), _config(args))
    results, ledger = run_program(drive, steps)
    for word in results:
        out.write(f"{word}\n")
    out.write(f"rotations {ledger.rotations}\n")


COMMANDS = {
    "gate": cmd_gate,
    "add": cmd_add,
    "physics-sweep": cmd_physics_sweep,
    "throughput": cmd_throughput,
    "track": cmd_track,
    "run": cmd_run,
}


def main(argv=None, out=None):
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        COMMANDS[args.command](args, out)
    except (HddLogicError, ValueError, OSError) as exc:
        print(f"hddlogic: error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
