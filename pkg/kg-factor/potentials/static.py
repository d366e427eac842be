from dataclasses import dataclass
from enum import Enum
from typing import Optional

import numpy as np

from core import AxisKind, ConfigurationError, Grid


class StaticKind(str, Enum):
    ZERO = "zero"
    CONSTANT = "constant"
    GAUSSIAN_WELL = "gaussian_well"
    HARMONIC = "harmonic"
    TABULATED = "tabulated"


_PARAMETERS = {
    StaticKind.ZERO: (),
    StaticKind.CONSTANT: ("value",),
    StaticKind.GAUSSIAN_WELL: ("depth", "center", "width"),
    StaticKind.HARMONIC: ("strength", "center"),
    StaticKind.TABULATED: ("samples",),
}


@dataclass(frozen=True, eq=False)
class StaticPotential:
    """
    Time-independent Salpeter potential V(x), in energy units.

    gaussian_well: depth * exp(-d(x, center)^2 / 2 width^2), d the minimum-image
                   distance on a space grid and the plain offset along z
    harmonic:      strength * (x - center)^2 / 2
    tabulated:     one sample per grid point
    """
    kind: StaticKind = StaticKind.ZERO
    value: float = 0.0
    depth: float = 0.0
    center: float = 0.0
    width: float = 1.0
    strength: float = 0.0
    samples: Optional[np.ndarray] = None

    def __post_init__(self):
        try:
            object.__setattr__(self, "kind", StaticKind(self.kind))
        except ValueError as e:
            raise ConfigurationError(f"Unknown static potential kind {self.kind!r}") from e
        if self.kind is StaticKind.GAUSSIAN_WELL and not self.width > 0:
            raise ConfigurationError(f"Gaussian well width must be positive, got {self.width}")
        if self.kind is StaticKind.TABULATED:
            if self.samples is None:
                raise ConfigurationError("Tabulated potential needs samples")
            samples = np.array(self.samples, dtype=float)
            if samples.ndim != 1 or not np.all(np.isfinite(samples)):
                raise ConfigurationError("Tabulated potential samples must be a finite 1-D sequence")
            samples.setflags(write=False)
            object.__setattr__(self, "samples", samples)

    @classmethod
    def zero(cls) -> 'StaticPotential':
        return cls()

    @classmethod
    def constant(cls, value: float) -> 'StaticPotential':
        return cls(StaticKind.CONSTANT, value=value)

    @classmethod
    def gaussian_well(cls, depth: float, center: float, width: float) -> 'StaticPotential':
        return cls(StaticKind.GAUSSIAN_WELL, depth=depth, center=center, width=width)

    @classmethod
    def harmonic(cls, strength: float, center: float = 0.0) -> 'StaticPotential':
        return cls(StaticKind.HARMONIC, strength=strength, center=center)

    @classmethod
    def tabulated(cls, samples) -> 'StaticPotential':
        return cls(StaticKind.TABULATED, samples=samples)

    @classmethod
    def create_from_dict(cls, d: dict) -> 'StaticPotential':
        d = dict(d)
        try:
            kind = StaticKind(d.pop("kind", StaticKind.ZERO))
        except ValueError as e:
            raise ConfigurationError(f"Unknown static potential kind in {d}") from e
        unknown = set(d) - set(_PARAMETERS[kind])
        if unknown:
            raise ConfigurationError(f"Unexpected parameters {sorted(unknown)} for {kind.value} potential")
        return cls(kind, **d)

    def to_dict(self) -> dict:
        d = {"kind": self.kind.value}
        for name in _PARAMETERS[self.kind]:
            value = getattr(self, name)
            d[name] = value.tolist() if isinstance(value, np.ndarray) else value
        return d

    @property
    def is_zero(self) -> bool:
        return self.kind is StaticKind.ZERO

    @property
    def is_uniform(self) -> bool:
        return self.kind in (StaticKind.ZERO, StaticKind.CONSTANT)


def eval_static_at(V: StaticPotential, positions: np.ndarray) -> np.ndarray:
    positions = np.asarray(positions, dtype=float)
    if V.kind is StaticKind.ZERO:
        return np.zeros_like(positions)
    if V.kind is StaticKind.CONSTANT:
        return np.full_like(positions, V.value)
    if V.kind is StaticKind.GAUSSIAN_WELL:
        return V.depth * np.exp(-(positions - V.center) ** 2 / (2 * V.width ** 2))
    if V.kind is StaticKind.HARMONIC:
        return 0.5 * V.strength * (positions - V.center) ** 2
    raise ConfigurationError("Tabulated potentials are only defined on their own grid")


def eval_static(V: StaticPotential, grid: Grid) -> np.ndarray:
    if grid.axis_kind is not AxisKind.SPACE:
        raise ConfigurationError("Static potentials are evaluated on space grids")
    if V.kind is StaticKind.TABULATED:
        if V.samples.shape[0] != grid.n:
            raise ConfigurationError(
                f"Tabulated potential has {V.samples.shape[0]} samples, grid has {grid.n}")
        return np.array(V.samples)
    if V.kind is StaticKind.GAUSSIAN_WELL:
        return V.depth * np.exp(-grid.periodic_distance(V.center) ** 2 / (2 * V.width ** 2))
    return eval_static_at(V, grid.coordinates)


def static_bound(V: StaticPotential, grid: Grid) -> float:
    """max |V| over the grid."""
    if V.is_zero:
        return 0.0
    return float(np.max(np.abs(eval_static(V, grid))))
