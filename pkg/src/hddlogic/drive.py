"""The virtual drive: rotation costs, throughput, track images and programs.

Track image format (text, one item per line)::

    MAGTRACK 1
    g <guard cells>
    cells <count>
    passes <count>
    pass <amplitude> <POSITIVE|NEGATIVE>     (one line per write pass)
    <magnetization>                          (one line per half-cell)
    end

Floats are written with 17 significant digits so every value round-trips
bit for bit.
"""
from __future__ import annotations

import enum
import os
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .channel import PassRecord, Track, read_ideal
from .encode import Word, as_word
from .errors import (CellCountError, GeometryError, HddLogicError, ImageVersionError,
                     InvalidArgumentError, MalformedImageError, ProgramError, TrackImageError)
from .logic import DEFAULT_CONFIG, Gate, LogicConfig, adder, decode_track, run_gate
from .medium import CellArray

MAGIC = "MAGTRACK"
IMAGE_VERSION = 1


class Head(enum.Enum):
    STANDARD = "standard"
    TANDEM = "tandem"


# write A, superimpose B, read: one rotation each unless the tandem head does all three
ROTATIONS_PER_OP = {Head.STANDARD: 3, Head.TANDEM: 1}


def rotations_for_op(head, composed: bool = False) -> int:
    per_op = ROTATIONS_PER_OP[Head(head)]
    return 2 * per_op if composed else per_op


@dataclass(frozen=True)
class DriveGeometry:
    revolutions_per_second: float = 100
    bits_per_track: int = 10**6
    head: Head = Head.TANDEM

    def __post_init__(self):
        if self.revolutions_per_second <= 0 or self.bits_per_track <= 0:
            raise InvalidArgumentError("revolutions and bits per track must be positive")


def throughput_bits_per_second(geom: DriveGeometry) -> Fraction:
    """Bit operations per second as an exact rational."""
    return (Fraction(geom.revolutions_per_second) * Fraction(geom.bits_per_track)
            / rotations_for_op(geom.head))


@dataclass
class CostLedger:
    rotations: int = 0
    operations: int = 0
    per_step: list = field(default_factory=list)

    def charge(self, rotations: int):
        self.rotations += rotations
        self.operations += 1
        self.per_step.append(rotations)


class ImageCells(CellArray):
    """Magnetization restored from an image; the particle state is not stored."""

    def __init__(self, values):
        self.values = np.asarray(values, dtype=np.float64)
        self.n_cells = self.values.size

    def apply(self, h, directions):
        raise TrackImageError("a loaded track image cannot be rewritten")

    def magnetization(self):
        return self.values.copy()


def _fmt(x: float) -> str:
    return format(float(x), ".17g")


def dumps_track(track: Track) -> str:
    lines = [f"{MAGIC} {IMAGE_VERSION}", f"g {track.g}", f"cells {track.n_cells}",
             f"passes {len(track.pass_log)}"]
    lines += [f"pass {_fmt(p.amplitude)} {p.polarity}" for p in track.pass_log]
    lines += [_fmt(v) for v in track.cells]
    lines.append("end")
    return "\n".join(lines) + "\n"


def save_track(track: Track, destination) -> None:
    text = dumps_track(track)
    if isinstance(destination, (str, os.PathLike)):
        with open(destination, "w") as fh:
            fh.write(text)
    else:
        destination.write(text)


def _header(lines, key):
    try:
        name, value = next(lines).split()
    except (StopIteration, ValueError):
        raise MalformedImageError(f"missing or malformed '{key}' header") from None
    if name != key:
        raise MalformedImageError(f"expected '{key}' header, found {name!r}")
    try:
        return int(value)
    except ValueError:
        raise MalformedImageError(f"'{key}' is not an integer: {value!r}") from None


def loads_track(text: str) -> Track:
    lines = iter(text.splitlines())
    first = next(lines, "").split()
    if len(first) != 2 or first[0] != MAGIC:
        raise MalformedImageError("not a track image (bad magic)")
    if first[1] != str(IMAGE_VERSION):
        raise ImageVersionError(f"unsupported image version {first[1]!r}")
    g = _header(lines, "g")
    n_cells = _header(lines, "cells")
    n_passes = _header(lines, "passes")
    if g < 1 or n_cells < 3 or (n_cells - 2) % (1 + g):
        raise CellCountError(f"{n_cells} half-cells do not fit guard g={g}")
    log = []
    for _ in range(n_passes):
        parts = next(lines, "").split()
        if len(parts) != 3 or parts[0] != "pass":
            raise MalformedImageError("truncated or malformed pass log")
        try:
            log.append(PassRecord(float(parts[1]), parts[2]))
        except ValueError:
            raise MalformedImageError(f"bad pass amplitude {parts[1]!r}") from None
    values = []
    for line in lines:
        if line == "end":
            break
        try:
            values.append(float(line))
        except ValueError:
            raise MalformedImageError(f"bad cell value {line!r}") from None
    else:
        raise MalformedImageError("truncated image (no end marker)")
    if len(values) != n_cells:
        raise CellCountError(f"header declares {n_cells} half-cells, found {len(values)}")
    return Track(ImageCells(values), None, g, log)


def load_track(source) -> Track:
    if isinstance(source, (str, os.PathLike)):
        with open(source) as fh:
            return loads_track(fh.read())
    return loads_track(source.read())


@dataclass(frozen=True)
class GateSpec:
    gate: Gate
    operands: tuple

    def __post_init__(self):
        gate = Gate(self.gate)
        ops = tuple(as_word(w) for w in self.operands)
        object.__setattr__(self, "gate", gate)
        object.__setattr__(self, "operands", ops)
        if len(ops) != gate.arity:
            raise InvalidArgumentError(f"{gate.name} takes {gate.arity} operand(s)")
        if len(ops) == 2 and len(ops[0]) != len(ops[1]):
            raise GeometryError("operands must have equal length")


@dataclass(frozen=True)
class AddStep:
    a: Word
    b: Word

    def __post_init__(self):
        object.__setattr__(self, "a", as_word(self.a))
        object.__setattr__(self, "b", as_word(self.b))


def parse_program(text: str) -> list:
    """Parse one command per line (``or 1010 1001``, ``not 1010``, ``add 11 1``).

    Blank lines and ``#`` comments are ignored.
    """
    steps = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        name, *args = line.split()
        try:
            if name.lower() == "add":
                if len(args) != 2:
                    raise InvalidArgumentError("add takes two operands")
                steps.append(AddStep(*args))
            else:
                steps.append(GateSpec(Gate(name.lower()), tuple(args)))
        except (ValueError, HddLogicError) as exc:
            raise InvalidArgumentError(f"line {lineno}: {exc}") from None
    return steps


class VirtualDrive:
    """Runs gate and add steps on fresh tracks and charges rotation costs."""

    def __init__(self, geometry: DriveGeometry = DriveGeometry(),
                 config: LogicConfig = DEFAULT_CONFIG):
        self.geometry = geometry
        self.config = config
        self.ledger = CostLedger()
        self.tracks = {}

    def step_cost(self, step) -> int:
        head = self.geometry.head
        if isinstance(step, AddStep):
            raise TypeError("adder cost depends on its iteration count")
        return rotations_for_op(head, step.gate.composed)

    def execute(self, step, name=None):
        if isinstance(step, AddStep):
            result = adder(step.a, step.b, self.config)
            self.ledger.charge(rotations_for_op(self.geometry.head) * result.elementary_ops)
            return result.word
        result = run_gate(step.gate, *step.operands, config=self.config)
        self.ledger.charge(self.step_cost(step))
        if name is not None:
            self.tracks[name] = result.track
        return result.word

    def decode(self, name, mode):
        track = self.tracks[name]
        return decode_track(track, read_ideal(track), mode, self.config)[0]


def run_program(drive: VirtualDrive, steps):
    """Execute ``steps`` in order; returns ``(results, ledger)``."""
    results = []
    for i, step in enumerate(steps):
        try:
            results.append(drive.execute(step, name=f"step{i}"))
        except HddLogicError as exc:
            raise ProgramError(i, exc) from exc
    return results, drive.ledger
