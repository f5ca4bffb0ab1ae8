"""Write passes onto a track and readback of its magnetization transitions."""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .encode import Polarity, PulseTrain, as_word, to_pulse_train, train_length
from .errors import GeometryError, InvalidArgumentError, WeakEraseError
from .medium import CellArray, LongitudinalMedium, PerpendicularMedium

DEFAULT_PW50 = 0.5
DEFAULT_SAMPLES_PER_CELL = 16


@dataclass(frozen=True)
class PassRecord:
    amplitude: float
    polarity: str


@dataclass
class Track:
    state: CellArray
    medium: LongitudinalMedium | PerpendicularMedium | None
    g: int = 1
    pass_log: list = field(default_factory=list)

    def __post_init__(self):
        if self.state.n_cells < 3:
            raise GeometryError("a track needs two guard half-cells and at least one data half-cell")

    @property
    def n_cells(self) -> int:
        return self.state.n_cells

    @property
    def bit_count(self) -> int:
        return (self.n_cells - 2) // (1 + self.g)

    @property
    def cells(self) -> np.ndarray:
        """Per-half-cell magnetization in units of M."""
        return self.state.magnetization()


def new_track(medium, bit_count: int, g: int = 1) -> Track:
    n = train_length(bit_count, g)
    return Track(medium.new_cells(n), medium, g)


def write_pass(track: Track, train: PulseTrain) -> Track:
    if len(train.signs) != track.n_cells:
        raise GeometryError(
            f"train has {len(train.signs)} half-cells, track has {track.n_cells}")
    track.state.apply(train.amplitude, train.signs)
    track.pass_log.append(PassRecord(train.amplitude, train.polarity.name))
    return track


@dataclass
class ReadbackSignal:
    """Transition amplitudes at each half-cell boundary, optionally shaped.

    ``transitions[i]`` is the change from half-cell ``i`` to ``i + 1`` and sits
    at track position ``i + 1`` (half-cell units).
    """

    transitions: np.ndarray
    positions: np.ndarray | None = None
    waveform: np.ndarray | None = None
    pw50: float | None = None

    def __post_init__(self):
        self.transitions = np.asarray(self.transitions, dtype=np.float64)
        if np.any(np.abs(self.transitions) > 2.0 + 1e-9):
            raise InvalidArgumentError("transition magnitude exceeds 2M")

    def negated(self) -> "ReadbackSignal":
        wf = None if self.waveform is None else -self.waveform
        return ReadbackSignal(-self.transitions, self.positions, wf, self.pw50)


def read_ideal(track: Track) -> ReadbackSignal:
    return ReadbackSignal(np.diff(track.cells))


def lorentzian(x, pw50):
    return 1.0 / (1.0 + (2.0 * x / pw50) ** 2)


def read_shaped(track: Track, pw50: float = DEFAULT_PW50,
                samples_per_cell: int = DEFAULT_SAMPLES_PER_CELL) -> ReadbackSignal:
    """Readback voltage as a sum of unit-height Lorentzian pulses.

    Each transition contributes ``dm * L(x - x_i)`` with ``L(0) = 1``, sampled
    ``samples_per_cell`` times per half-cell so every boundary is a sample.
    """
    if pw50 <= 0:
        raise InvalidArgumentError("pw50 must be positive")
    if samples_per_cell < 4:
        raise InvalidArgumentError("need at least 4 samples per half-cell")
    ideal = read_ideal(track)
    x = np.arange(track.n_cells * samples_per_cell + 1) / samples_per_cell
    centers = np.arange(1, track.n_cells, dtype=np.float64)
    nz = ideal.transitions != 0
    v = lorentzian(x[:, None] - centers[nz][None, :], pw50) @ ideal.transitions[nz]
    return ReadbackSignal(ideal.transitions, x, v, pw50)


@dataclass(frozen=True)
class TrainSpec:
    polarity: Polarity = Polarity.POSITIVE
    g: int = 1
    amplitude: float | None = None


def run_superimposition(medium, word_a, spec_a: TrainSpec, word_b, spec_b: TrainSpec):
    """Erase-write ``word_a`` with the strong field, then write ``word_b`` with the weak one.

    Returns the finished track and its ideal readback. Amplitudes default to
    the medium's strong and weak (balanced) fields.
    """
    word_a, word_b = as_word(word_a), as_word(word_b)
    if spec_a.g != spec_b.g:
        raise GeometryError(f"guard mismatch: {spec_a.g} vs {spec_b.g}")
    if len(word_a) != len(word_b):
        raise GeometryError(f"word lengths differ: {len(word_a)} vs {len(word_b)}")
    strong = medium.strong_field()
    amp_a = strong if spec_a.amplitude is None else spec_a.amplitude
    amp_b = medium.weak_field() if spec_b.amplitude is None else spec_b.amplitude
    if amp_a < strong:
        raise WeakEraseError(f"first pass amplitude {amp_a} cannot erase (needs >= {strong})")
    track = new_track(medium, len(word_a), spec_a.g)
    write_pass(track, to_pulse_train(word_a, spec_a.polarity, spec_a.g, amp_a))
    write_pass(track, to_pulse_train(word_b, spec_b.polarity, spec_b.g, amp_b))
    return track, read_ideal(track)
