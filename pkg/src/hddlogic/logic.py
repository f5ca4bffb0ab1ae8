"""Logic gates and an iterative carry adder executed through the recording pipeline.

Every gate superimposes its operands on a fresh track, reads the track back
and decodes it with one of the three detector modes:

========  ==================  ==============
gate      second operand      detector mode
========  ==================  ==============
OR        positive            ANY
AND       positive            LARGE_ONLY
XOR       positive            MEDIUM_ONLY
XOR_NEG   negative            ANY
NOT       negative all-ones   ANY
========  ==================  ==============

NAND, NOR and XNOR re-record the inner gate's result and apply NOT to it.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field

from .channel import ReadbackSignal, Track, TrainSpec, read_shaped, run_superimposition
from .detector import DetectMode, DetectorConfig, decode_word, detect_peaks, window_flags
from .encode import Polarity, Word, as_word
from .errors import GeometryError, InvalidArgumentError, NonterminationError
from .medium import LongitudinalMedium


class Gate(enum.Enum):
    OR = "or"
    AND = "and"
    XOR = "xor"
    XOR_NEG = "xorneg"
    NOT = "not"
    NAND = "nand"
    NOR = "nor"
    XNOR = "xnor"

    @property
    def arity(self) -> int:
        return 1 if self is Gate.NOT else 2

    @property
    def composed(self) -> bool:
        return self in _COMPOSED


_COMPOSED = {Gate.NAND: Gate.AND, Gate.NOR: Gate.OR, Gate.XNOR: Gate.XOR}

_ELEMENTARY = {
    Gate.OR: (Polarity.POSITIVE, DetectMode.ANY),
    Gate.AND: (Polarity.POSITIVE, DetectMode.LARGE_ONLY),
    Gate.XOR: (Polarity.POSITIVE, DetectMode.MEDIUM_ONLY),
    Gate.XOR_NEG: (Polarity.NEGATIVE, DetectMode.ANY),
}


@dataclass(frozen=True)
class LogicConfig:
    medium: object = field(default_factory=LongitudinalMedium)
    g: int = 1
    theta_low: float = 0.5
    theta_high: float = 1.5
    # None selects the medium's own strong / weak (balanced) field
    strong: float | None = None
    weak: float | None = None
    shaped: bool = False
    pw50: float = 0.5
    samples_per_cell: int = 16

    def detector(self, mode: DetectMode) -> DetectorConfig:
        return DetectorConfig(self.theta_low, self.theta_high, mode)


DEFAULT_CONFIG = LogicConfig()


@dataclass
class GateResult:
    word: Word
    track: Track
    signal: ReadbackSignal
    events: list
    elementary_ops: int = 1


def _check_pair(a, b):
    a, b = as_word(a), as_word(b)
    if len(a) != len(b):
        raise GeometryError(f"operand lengths differ: {len(a)} vs {len(b)}")
    return a, b


def superimpose(a, b, polarity_b=Polarity.POSITIVE, config: LogicConfig = DEFAULT_CONFIG):
    """Write ``a`` (strong, positive) then ``b`` (weak, ``polarity_b``); return track and readback."""
    a, b = _check_pair(a, b)
    track, signal = run_superimposition(
        config.medium, a, TrainSpec(Polarity.POSITIVE, config.g, config.strong),
        b, TrainSpec(polarity_b, config.g, config.weak))
    if config.shaped:
        signal = read_shaped(track, config.pw50, config.samples_per_cell)
    return track, signal


def decode_track(track: Track, signal: ReadbackSignal, mode: DetectMode,
                 config: LogicConfig = DEFAULT_CONFIG):
    events = detect_peaks(signal, config.detector(mode), from_waveform=config.shaped)
    flags = window_flags(events, track.bit_count, track.g, mode)
    return decode_word(flags), events


def _elementary(gate, a, b, config):
    polarity, mode = _ELEMENTARY[gate]
    track, signal = superimpose(a, b, polarity, config)
    word, events = decode_track(track, signal, mode, config)
    return GateResult(word, track, signal, events)


def run_gate(gate, a, b=None, config: LogicConfig = DEFAULT_CONFIG) -> GateResult:
    gate = Gate(gate)
    if gate is Gate.NOT:
        if b is not None:
            raise InvalidArgumentError("NOT takes one operand")
        a = as_word(a)
        return _elementary(Gate.XOR_NEG, a, Word.ones(len(a)), config)
    if b is None:
        raise InvalidArgumentError(f"{gate.name} takes two operands")
    if gate.composed:
        inner = _elementary(_COMPOSED[gate], a, b, config)
        outer = run_gate(Gate.NOT, inner.word, config=config)
        outer.elementary_ops += inner.elementary_ops
        return outer
    return _elementary(gate, a, b, config)


def gate_or(a, b, config=DEFAULT_CONFIG) -> Word:
    return run_gate(Gate.OR, a, b, config).word


def gate_and(a, b, config=DEFAULT_CONFIG) -> Word:
    return run_gate(Gate.AND, a, b, config).word


def gate_xor(a, b, config=DEFAULT_CONFIG) -> Word:
    return run_gate(Gate.XOR, a, b, config).word


def gate_xor_neg(a, b, config=DEFAULT_CONFIG) -> Word:
    return run_gate(Gate.XOR_NEG, a, b, config).word


def gate_not(a, config=DEFAULT_CONFIG) -> Word:
    return run_gate(Gate.NOT, a, config=config).word


def gate_composed(kind, a, b, config=DEFAULT_CONFIG) -> Word:
    kind = Gate(kind)
    if not kind.composed:
        raise InvalidArgumentError(f"{kind.name} is not a composed gate")
    return run_gate(kind, a, b, config).word


def left_shift(w) -> Word:
    """Shift left by one register, widening so no carry is lost."""
    w = as_word(w)
    return Word(w.bits + (0,))


@dataclass
class AddResult:
    word: Word
    iterations: int

    @property
    def elementary_ops(self) -> int:
        # one XOR and one AND per iteration
        return 2 * self.iterations


def adder(a, b, config: LogicConfig = DEFAULT_CONFIG) -> AddResult:
    """Sum two words by iterating XOR / AND / left-shift until the carry vanishes."""
    a, b = as_word(a), as_word(b)
    width = max(len(a), len(b))
    a, b = a.padded(width), b.padded(width)
    limit = width + 1
    iterations = 0
    while True:
        if iterations >= limit:
            raise NonterminationError(f"adder exceeded {limit} iterations")
        iterations += 1
        s = gate_xor(a, b, config)
        carry = gate_and(a, b, config)
        if carry.is_zero():
            break
        b = left_shift(carry)
        a = s.padded(len(b))
    bits = s.bits
    first = next((i for i, bit in enumerate(bits) if bit), len(bits) - 1)
    return AddResult(Word(bits[first:]), iterations)


def add(a, b, config: LogicConfig = DEFAULT_CONFIG) -> Word:
    return adder(a, b, config).word


_ORACLE = {
    Gate.OR: lambda x, y: x | y,
    Gate.AND: lambda x, y: x & y,
    Gate.XOR: lambda x, y: x ^ y,
    Gate.XOR_NEG: lambda x, y: x ^ y,
    Gate.NAND: lambda x, y: 1 - (x & y),
    Gate.NOR: lambda x, y: 1 - (x | y),
    Gate.XNOR: lambda x, y: 1 - (x ^ y),
}


def boolean_oracle(gate, a, b=None) -> Word:
    """Bitwise reference result, no physics involved."""
    gate = Gate(gate)
    a = as_word(a)
    if gate is Gate.NOT:
        return Word(tuple(1 - x for x in a.bits))
    if b is None:
        raise InvalidArgumentError(f"{gate.name} takes two operands")
    a, b = _check_pair(a, b)
    op = _ORACLE[gate]
    return Word(tuple(op(x, y) for x, y in zip(a.bits, b.bits)))
