"""Amplitude-discriminating peak detection and window decoding."""
from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .channel import ReadbackSignal
from .encode import Word, window_boundaries
from .errors import DesynchronizationError, InvalidArgumentError


class PeakClass(enum.Enum):
    MEDIUM = "M"
    LARGE = "2M"


class DetectMode(enum.Enum):
    ANY = "any"
    LARGE_ONLY = "large"
    MEDIUM_ONLY = "medium"

    def accepts(self, cls: PeakClass) -> bool:
        if self is DetectMode.ANY:
            return True
        if self is DetectMode.LARGE_ONLY:
            return cls is PeakClass.LARGE
        return cls is PeakClass.MEDIUM


@dataclass(frozen=True)
class PeakEvent:
    boundary_index: int
    amplitude: float
    peak_class: PeakClass


@dataclass(frozen=True)
class DetectorConfig:
    # midpoints between the possible amplitudes 0, M and 2M
    theta_low: float = 0.5
    theta_high: float = 1.5
    mode: DetectMode = DetectMode.ANY

    def __post_init__(self):
        if not 0 < self.theta_low < self.theta_high:
            raise InvalidArgumentError("need 0 < theta_low < theta_high")

    def classify(self, amplitude: float) -> PeakClass | None:
        a = abs(amplitude)
        if a < self.theta_low:
            return None
        return PeakClass.LARGE if a >= self.theta_high else PeakClass.MEDIUM


def _events_from_transitions(transitions, cfg):
    mag = np.abs(transitions)
    idx = np.flatnonzero(mag >= cfg.theta_low)
    large = (mag[idx] >= cfg.theta_high).tolist()
    return [PeakEvent(i, a, PeakClass.LARGE if big else PeakClass.MEDIUM)
            for i, a, big in zip(idx.tolist(), transitions[idx].tolist(), large)]


def _events_from_waveform(signal: ReadbackSignal, cfg, pulse_height=1.0):
    v = signal.waveform / pulse_height
    a = np.abs(v)
    # local maxima of |v|; the left test is non-strict so plateaus count once
    interior = (a[1:-1] >= a[:-2]) & (a[1:-1] > a[2:]) & (a[1:-1] >= cfg.theta_low)
    idx = np.flatnonzero(interior) + 1
    n_bounds = len(signal.transitions)
    best = {}
    for j in idx:
        b = int(round(signal.positions[j])) - 1
        if 0 <= b < n_bounds and (b not in best or a[j] > abs(best[b])):
            best[b] = float(v[j])
    return [PeakEvent(b, amp, cfg.classify(amp)) for b, amp in sorted(best.items())]


def detect_peaks(signal: ReadbackSignal, cfg: DetectorConfig = DetectorConfig(),
                 from_waveform: bool = False) -> list:
    """One event per boundary whose transition reaches ``theta_low``.

    With ``from_waveform`` the sampled readback is searched for local extrema
    instead, each assigned to the nearest boundary. Reliable only while
    neighbouring pulses stay resolved (pw50 around half a half-cell).
    """
    if from_waveform:
        if signal.waveform is None:
            raise InvalidArgumentError("signal carries no waveform")
        return _events_from_waveform(signal, cfg)
    return _events_from_transitions(signal.transitions, cfg)


def window_flags(events, bit_count: int, g: int, mode: DetectMode = DetectMode.ANY):
    """Flag pair per bit window: is there an accepted peak at each pulse edge."""
    hit = {e.boundary_index for e in events if mode.accepts(e.peak_class)}
    flags = []
    for i in range(bit_count):
        start, mid = window_boundaries(i, g, bit_count)
        flags.append((int(start - 1 in hit), int(mid - 1 in hit)))
    return flags


def decode_word(flag_pairs) -> Word:
    bits = []
    for i, (a, b) in enumerate(flag_pairs):
        if a != b:
            raise DesynchronizationError(f"window {i} has mixed flags ({a},{b})")
        bits.append(a)
    return Word(tuple(bits))


def format_flags(flag_pairs) -> str:
    return "".join(f"({a}{b})" for a, b in flag_pairs)
