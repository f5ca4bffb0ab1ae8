"""Recording-medium physics.

Two media are modelled:

* a longitudinal medium of identical uniaxial particles whose easy axes are
  spread uniformly in the disk plane. A particle at angle ``phi`` from the
  track axis reverses under an opposed field ``h >= cos(phi)`` (fields are
  normalized to the anisotropy field H_K) and contributes ``cos(phi)`` to the
  track-axis magnetization;
* a perpendicular medium made of two equal-weight populations with distinct
  anisotropy fields ``hk1 > hk2``.

Magnetizations are expressed in units of the saturated remanence M, so a
saturated cell is exactly +1 or -1.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field

import numpy as np

from ._backend import kernels
from .errors import InvalidArgumentError, OutOfRangeError

HALF_PI = math.pi / 2


class Mode(enum.Enum):
    ANALYTIC = "analytic"
    MONTE_CARLO = "monte_carlo"


@dataclass
class ParticleEnsemble:
    angles: np.ndarray
    signs: np.ndarray
    seed: int | None = None
    _cos: np.ndarray | None = field(default=None, repr=False, compare=False)

    def __post_init__(self):
        self.angles = np.asarray(self.angles, dtype=np.float64)
        self.signs = np.asarray(self.signs, dtype=np.int8)
        if self.angles.ndim != 1 or self.angles.size == 0:
            raise InvalidArgumentError("ensemble must hold at least one particle")
        if self.angles.shape != self.signs.shape:
            raise InvalidArgumentError("angles and signs must have equal length")
        if np.any(self.angles <= -HALF_PI) or np.any(self.angles > HALF_PI):
            raise InvalidArgumentError("angles must lie in (-pi/2, pi/2]")
        if not np.all(np.abs(self.signs) == 1):
            raise InvalidArgumentError("signs must be -1 or +1")

    def __len__(self):
        return self.angles.size

    @property
    def cos_phi(self) -> np.ndarray:
        """Per-particle normalized switching field and track-axis weight."""
        if self._cos is None:
            # cos can round to a tiny negative at exactly pi/2
            self._cos = np.clip(np.cos(self.angles), 0.0, 1.0)
        return self._cos

    def copy(self) -> "ParticleEnsemble":
        return ParticleEnsemble(self.angles, self.signs.copy(), self.seed, self._cos)


def _uniform_angles(rng, size):
    # rng.uniform is half-open [0, pi), so this lands on (-pi/2, pi/2]
    return HALF_PI - rng.uniform(0.0, math.pi, size=size)


def sample_ensemble(n: int, seed: int) -> ParticleEnsemble:
    """Draw ``n`` easy-axis angles uniformly on (-pi/2, pi/2], all signs +1.

    The generator is numpy's PCG64 (``np.random.default_rng(seed)``), so a
    given seed always yields the same angles.
    """
    if n < 1:
        raise InvalidArgumentError(f"particle count must be >= 1, got {n}")
    rng = np.random.default_rng(seed)
    angles = _uniform_angles(rng, n)
    return ParticleEnsemble(angles, np.ones(n, dtype=np.int8), seed)


def threshold_angle(h2: float) -> float:
    """Angle phi0 = arccos(h2) separating retained from reversed particles."""
    if not 0.0 < h2 <= 1.0:
        raise OutOfRangeError(f"h2 must lie in (0, 1], got {h2}")
    return math.acos(h2)


def balanced_field() -> float:
    """Weak-field amplitude at which an opposed pass leaves zero remanence."""
    return math.sqrt(3.0) / 2.0


def apply_field(ensemble: ParticleEnsemble, h: float, direction: int) -> ParticleEnsemble:
    """Return a copy of ``ensemble`` after a field pass of amplitude ``h``.

    A particle opposing ``direction`` reverses iff ``h >= cos(phi)``;
    aligned particles are untouched.
    """
    if h < 0:
        raise InvalidArgumentError(f"field amplitude must be >= 0, got {h}")
    if direction not in (-1, 1):
        raise InvalidArgumentError(f"direction must be -1 or +1, got {direction}")
    out = ensemble.copy()
    kernels.apply_field(out.cos_phi, out.signs, float(h), int(direction))
    return out


def net_magnetization(ensemble: ParticleEnsemble) -> float:
    if len(ensemble) == 0:
        raise InvalidArgumentError("empty ensemble")
    return kernels.net_magnetization(ensemble.cos_phi, ensemble.signs)


def type1_fraction(ensemble: ParticleEnsemble, h2: float) -> float:
    """Magnetization weight carried by particles that survive an opposed ``h2``."""
    cos_phi = ensemble.cos_phi
    return float(cos_phi[cos_phi > h2].sum() / cos_phi.sum())


def _retained_weight(u):
    # Weight of particles with cos(phi) > u is sin(arccos u); this form gives
    # exactly 0.5 at the balanced field, unlike sqrt(1 - u*u).
    return np.sin(np.arccos(u))


def remanence_after_opposed(h2: float) -> float:
    """Closed-form remanence of a +saturated medium after one opposed pass."""
    if not 0.0 <= h2 <= 1.0:
        raise InvalidArgumentError(f"h2 must lie in [0, 1], got {h2}")
    return 2.0 * float(_retained_weight(h2)) - 1.0


def analytic_cell_write(s1: int, s2: int) -> float:
    """Cell value after a strong pass ``s1`` and a balanced-field pass ``s2``."""
    if s1 not in (-1, 1) or s2 not in (-1, 1):
        raise InvalidArgumentError("signs must be -1 or +1")
    return (s1 + s2) / 2


@dataclass(frozen=True)
class LongitudinalMedium:
    """Random-axis longitudinal medium; all fields are given in units of ``hk``."""

    hk: float = 1.0
    mode: Mode = Mode.ANALYTIC
    particles_per_cell: int = 10_000
    seed: int = 0

    def __post_init__(self):
        if self.hk <= 0:
            raise InvalidArgumentError("hk must be positive")
        if self.mode is Mode.MONTE_CARLO and self.particles_per_cell < 1:
            raise InvalidArgumentError("particles_per_cell must be >= 1")

    def strong_field(self) -> float:
        return 1.0

    def weak_field(self) -> float:
        return balanced_field()

    def new_cells(self, n_cells: int) -> "CellArray":
        if self.mode is Mode.MONTE_CARLO:
            return MonteCarloCells.sample(n_cells, self.particles_per_cell, self.seed)
        return AnalyticCells(n_cells)


@dataclass(frozen=True)
class PerpendicularMedium:
    """Two-population perpendicular medium, each population weighted 1/2.

    Fields passed to this medium are absolute, in the units of ``hk1``/``hk2``.
    """

    hk1: float = 1.0
    hk2: float = 0.5

    def __post_init__(self):
        if not self.hk1 > self.hk2 > 0:
            raise InvalidArgumentError("need hk1 > hk2 > 0")

    @property
    def weights(self):
        return (0.5, 0.5)

    def strong_field(self) -> float:
        return self.hk1

    def weak_field(self) -> float:
        return self.hk2

    def new_cells(self, n_cells: int) -> "CellArray":
        return PerpendicularCells(n_cells, self.hk1, self.hk2)


def perpendicular_apply_field(state, h_absolute, direction, medium: PerpendicularMedium):
    """Apply a field to one perpendicular cell given as ``(sign1, sign2)``."""
    if h_absolute < 0:
        raise InvalidArgumentError("field amplitude must be >= 0")
    return tuple(
        direction if (s != direction and h_absolute >= hk) else s
        for s, hk in zip(state, (medium.hk1, medium.hk2))
    )


def perpendicular_magnetization(state) -> float:
    return (state[0] + state[1]) / 2


# Per-track cell arrays. Each holds the microscopic state of every half-cell
# of a track and supports one operation per write pass.

class CellArray:
    n_cells: int

    def apply(self, h: float, directions: np.ndarray) -> None:
        raise NotImplementedError

    def magnetization(self) -> np.ndarray:
        raise NotImplementedError


class AnalyticCells(CellArray):
    """Continuum limit of the random-axis ensemble.

    A cell's state is a sign per band of normalized switching field
    ``u = cos(phi)`` in [0, 1]. Band edges are shared by all cells of a track
    because every cell in a pass sees the same amplitude. A pass at ``h`` sets
    every band below ``h`` to the cell's field direction, so the bands below
    ``h`` merge into one.
    """

    def __init__(self, n_cells: int, baseline: int = -1):
        self.n_cells = n_cells
        self.edges = [0.0, 1.0]
        self.bands = np.full((n_cells, 1), baseline, dtype=np.int8)

    def apply(self, h, directions):
        d = np.asarray(directions, dtype=np.int8)
        if h <= 0.0:
            return
        if h >= 1.0:
            self.edges = [0.0, 1.0]
            self.bands = d[:, None].copy()
            return
        # bands whose upper edge is <= h are fully switched
        k = next(i for i, e in enumerate(self.edges) if e > h) - 1
        self.edges = [0.0, h] + self.edges[k + 1:]
        self.bands = np.concatenate([d[:, None], self.bands[:, k:]], axis=1)

    def band_weights(self) -> np.ndarray:
        w = _retained_weight(np.asarray(self.edges))
        return w[:-1] - w[1:]

    def magnetization(self):
        return self.bands.astype(np.float64) @ self.band_weights()


class MonteCarloCells(CellArray):
    """Explicit particle ensemble per cell (rows are cells)."""

    def __init__(self, cos_phi: np.ndarray, signs: np.ndarray):
        self.cos_phi = np.ascontiguousarray(cos_phi, dtype=np.float64)
        self.signs = np.ascontiguousarray(signs, dtype=np.int8)
        self.n_cells = self.cos_phi.shape[0]

    @classmethod
    def sample(cls, n_cells, particles_per_cell, seed, baseline=-1):
        rng = np.random.default_rng(seed)
        angles = _uniform_angles(rng, (n_cells, particles_per_cell))
        cos_phi = np.clip(np.cos(angles), 0.0, 1.0)
        return cls(cos_phi, np.full(cos_phi.shape, baseline, dtype=np.int8))

    def apply(self, h, directions):
        d = np.ascontiguousarray(directions, dtype=np.int8)
        kernels.apply_field_cells(self.cos_phi, self.signs, float(h), d)

    def magnetization(self):
        return np.asarray(kernels.net_magnetization_cells(self.cos_phi, self.signs))


class PerpendicularCells(CellArray):
    def __init__(self, n_cells: int, hk1: float, hk2: float, baseline: int = -1):
        self.n_cells = n_cells
        self.thresholds = np.array([hk1, hk2])
        self.signs = np.full((n_cells, 2), baseline, dtype=np.int8)

    def apply(self, h, directions):
        d = np.asarray(directions, dtype=np.int8)
        switching = h >= self.thresholds
        self.signs[:, switching] = d[:, None]

    def magnetization(self):
        return self.signs.sum(axis=1) / 2.0
