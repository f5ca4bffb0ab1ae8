"""Binary words and their write-pulse representation.

A word of ``n`` bits is written as ``n`` windows of ``1 + g`` half-cells. A
1-bit puts one half-cell pulse at the start of its window followed by ``g``
baseline half-cells; a 0-bit is all baseline. One extra baseline half-cell
pads each end of the track. ``g = 1`` is the plain doubled form (0 -> 00,
1 -> 11 counted in transitions); ``g = 2, 3`` give the 101 / 1001 codes.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .errors import GeometryError, InvalidArgumentError, MalformedDoublingError


@dataclass(frozen=True)
class Word:
    """Bits, most significant first."""

    bits: tuple

    def __post_init__(self):
        bits = tuple(self.bits)
        if not bits:
            raise InvalidArgumentError("a word needs at least one bit")
        if not set(bits) <= {0, 1}:
            raise InvalidArgumentError(f"word bits must be 0/1: {self.bits!r}")
        object.__setattr__(self, "bits", tuple(map(int, bits)))

    @classmethod
    def parse(cls, text: str) -> "Word":
        text = text.strip()
        if not text or set(text) - {"0", "1"}:
            raise InvalidArgumentError(f"not a binary word: {text!r}")
        return cls(tuple(int(c) for c in text))

    @classmethod
    def zeros(cls, n):
        return cls((0,) * n)

    @classmethod
    def ones(cls, n):
        return cls((1,) * n)

    @classmethod
    def from_int(cls, value: int, width: int = 1) -> "Word":
        if value < 0:
            raise InvalidArgumentError("value must be non-negative")
        return cls.parse(format(value, f"0{width}b"))

    def __len__(self):
        return len(self.bits)

    def __iter__(self):
        return iter(self.bits)

    def __str__(self):
        return "".join(map(str, self.bits))

    def __int__(self):
        return int(str(self), 2)

    def padded(self, width: int) -> "Word":
        """Left-pad with zeros to ``width`` (never truncates)."""
        if width <= len(self):
            return self
        return Word((0,) * (width - len(self)) + self.bits)

    def is_zero(self) -> bool:
        return not any(self.bits)


def as_word(w) -> Word:
    if isinstance(w, Word):
        return w
    if isinstance(w, str):
        return Word.parse(w)
    return Word(tuple(w))


class Polarity(enum.Enum):
    POSITIVE = 1
    NEGATIVE = -1


@dataclass(frozen=True)
class PulseTrain:
    signs: np.ndarray
    amplitude: float
    g: int = 1
    polarity: Polarity = Polarity.POSITIVE

    @property
    def bit_count(self) -> int:
        return (len(self.signs) - 2) // (1 + self.g)

    def negated(self) -> "PulseTrain":
        flipped = Polarity.NEGATIVE if self.polarity is Polarity.POSITIVE else Polarity.POSITIVE
        return PulseTrain(-self.signs, self.amplitude, self.g, flipped)


def double_bits(w) -> Word:
    w = as_word(w)
    return Word(tuple(b for b in w.bits for _ in range(2)))


def undouble_bits(w) -> Word:
    w = as_word(w)
    bits = w.bits
    if len(bits) % 2:
        raise MalformedDoublingError(f"odd length {len(bits)}")
    pairs = zip(bits[::2], bits[1::2])
    out = []
    for i, (a, b) in enumerate(pairs):
        if a != b:
            raise MalformedDoublingError(f"mixed pair {a}{b} at position {i}")
        out.append(a)
    return Word(tuple(out))


def train_length(bit_count: int, g: int) -> int:
    return bit_count * (1 + g) + 2


def to_pulse_train(w, polarity=Polarity.POSITIVE, g: int = 1, amplitude: float = 1.0) -> PulseTrain:
    """Per-half-cell field directions for writing ``w``.

    Positive trains sit at baseline -1 with +1 pulses; negative trains are
    the sign-flipped image.
    """
    w = as_word(w)
    if g < 1:
        raise InvalidArgumentError(f"guard cells must be >= 1, got {g}")
    polarity = Polarity(polarity) if not isinstance(polarity, Polarity) else polarity
    width = 1 + g
    signs = np.full(train_length(len(w), g), -1, dtype=np.int8)
    ones = np.flatnonzero(np.array(w.bits, dtype=bool))
    signs[1 + ones * width] = 1
    if polarity is Polarity.NEGATIVE:
        signs = -signs
    return PulseTrain(signs, float(amplitude), g, polarity)


def window_boundaries(bit_index: int, g: int, bit_count: int | None = None):
    """Edge positions bracketing the pulse half-cell of window ``bit_index``.

    Position ``k`` is the left edge of half-cell ``k``; the readback
    transition at position ``k`` is entry ``k - 1`` of the transition list.
    """
    if bit_index < 0 or (bit_count is not None and bit_index >= bit_count):
        raise GeometryError(f"bit index {bit_index} out of range")
    start = 1 + bit_index * (1 + g)
    return start, start + 1
