from dataclasses import dataclass, replace
from enum import Enum
from typing import Optional

import numpy as np

from core import AxisKind, ConfigurationError, Constants, Grid


class DynamicKind(str, Enum):
    ZERO = "zero"
    CONSTANT = "constant"
    STANDING_WAVE = "standing_wave"
    TRAVELING_WAVE = "traveling_wave"
    TABULATED = "tabulated"


_PARAMETERS = {
    DynamicKind.ZERO: (),
    DynamicKind.CONSTANT: ("value",),
    DynamicKind.STANDING_WAVE: ("amplitude", "wavenumber", "omega"),
    DynamicKind.TRAVELING_WAVE: ("amplitude", "wavenumber", "omega"),
    DynamicKind.TABULATED: ("samples", "interval"),
}


@dataclass(frozen=True, eq=False)
class DynamicPotential:
    """
    Space-time dependent potential Xi(x, t). Dimensionless when used as the
    gravitational proxy; the p-solver also accepts one as a z/t dependent V.

    standing_wave:  amplitude * cos(wavenumber x) * cos(omega t)
    traveling_wave: amplitude * cos(wavenumber x - omega t)
    tabulated:      rows indexed by round(march_variable / interval), one
                    column per grid sample
    """
    kind: DynamicKind = DynamicKind.ZERO
    value: float = 0.0
    amplitude: float = 0.0
    wavenumber: float = 0.0
    omega: float = 0.0
    samples: Optional[np.ndarray] = None
    interval: float = 1.0

    def __post_init__(self):
        try:
            object.__setattr__(self, "kind", DynamicKind(self.kind))
        except ValueError as e:
            raise ConfigurationError(f"Unknown dynamic potential kind {self.kind!r}") from e
        if self.kind is DynamicKind.TABULATED:
            if self.samples is None:
                raise ConfigurationError("Tabulated dynamic potential needs samples")
            samples = np.array(self.samples, dtype=float)
            if samples.ndim != 2 or not np.all(np.isfinite(samples)):
                raise ConfigurationError("Tabulated dynamic samples must be a finite 2-D table")
            if not self.interval > 0:
                raise ConfigurationError(f"Tabulated interval must be positive, got {self.interval}")
            samples.setflags(write=False)
            object.__setattr__(self, "samples", samples)

    @classmethod
    def zero(cls) -> 'DynamicPotential':
        return cls()

    @classmethod
    def constant(cls, value: float) -> 'DynamicPotential':
        return cls(DynamicKind.CONSTANT, value=value)

    @classmethod
    def standing_wave(cls, amplitude: float, wavenumber: float, omega: float) -> 'DynamicPotential':
        return cls(DynamicKind.STANDING_WAVE, amplitude=amplitude, wavenumber=wavenumber, omega=omega)

    @classmethod
    def traveling_wave(cls, amplitude: float, wavenumber: float, omega: float) -> 'DynamicPotential':
        return cls(DynamicKind.TRAVELING_WAVE, amplitude=amplitude, wavenumber=wavenumber, omega=omega)

    @classmethod
    def tabulated(cls, samples, interval: float) -> 'DynamicPotential':
        return cls(DynamicKind.TABULATED, samples=samples, interval=interval)

    @classmethod
    def create_from_dict(cls, d: dict) -> 'DynamicPotential':
        d = dict(d)
        try:
            kind = DynamicKind(d.pop("kind", DynamicKind.ZERO))
        except ValueError as e:
            raise ConfigurationError(f"Unknown dynamic potential kind in {d}") from e
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
        return self.kind is DynamicKind.ZERO

    @property
    def is_uniform(self) -> bool:
        return self.kind in (DynamicKind.ZERO, DynamicKind.CONSTANT)

    @property
    def bound(self) -> float:
        """Upper bound of |Xi| over all x and t."""
        if self.kind is DynamicKind.CONSTANT:
            return abs(self.value)
        if self.kind in (DynamicKind.STANDING_WAVE, DynamicKind.TRAVELING_WAVE):
            return abs(self.amplitude)
        if self.kind is DynamicKind.TABULATED:
            return float(np.max(np.abs(self.samples)))
        return 0.0

    def scaled(self, factor: float) -> 'DynamicPotential':
        if self.kind is DynamicKind.TABULATED:
            return replace(self, samples=self.samples * factor)
        return replace(self, value=self.value * factor, amplitude=self.amplitude * factor)


def _profile(Xi: DynamicPotential, x, t) -> np.ndarray:
    if Xi.kind is DynamicKind.CONSTANT:
        return np.full(np.broadcast(x, t).shape, Xi.value)
    if Xi.kind is DynamicKind.STANDING_WAVE:
        return Xi.amplitude * np.cos(Xi.wavenumber * x) * np.cos(Xi.omega * t)
    return Xi.amplitude * np.cos(Xi.wavenumber * x - Xi.omega * t)


def eval_dynamic(Xi: DynamicPotential, grid: Grid, t: float) -> np.ndarray:
    """
    Samples along the grid at march position t: Xi(x_j, t) on a space grid,
    Xi(x = t, t_j) on a time grid.
    """
    if Xi.kind is DynamicKind.ZERO:
        return np.zeros(grid.n)
    if Xi.kind is DynamicKind.TABULATED:
        row = int(np.round(t / Xi.interval))
        rows, columns = Xi.samples.shape
        if not 0 <= row < rows:
            raise ConfigurationError(f"Tabulated potential has no row for {t} (row {row} of {rows})")
        if columns != grid.n:
            raise ConfigurationError(f"Tabulated potential has {columns} columns, grid has {grid.n}")
        return np.array(Xi.samples[row])
    if grid.axis_kind is AxisKind.SPACE:
        return _profile(Xi, grid.coordinates, t)
    return _profile(Xi, t, grid.coordinates)


def merge_into_xi(dV: DynamicPotential, consts: Constants) -> DynamicPotential:
    """Express a time-dependent Salpeter term dV(x, t) as the equivalent Xi = dV / mc^2."""
    consts.require_mass("merge_into_xi")
    return dV.scaled(1.0 / consts.rest_energy)
