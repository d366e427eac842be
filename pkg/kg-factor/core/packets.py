from dataclasses import asdict, dataclass, field
from enum import Enum
from typing import Optional, Tuple, Union

import numpy as np

from .errors import ConfigurationError
from .field import ComplexField
from .grid import AxisKind, Grid
from .norms import l2_norm

# packet-fit rule: sigma < L / 8 and |k0| < k_Nyquist / 4
MAX_WIDTH_FRACTION = 1 / 8
MAX_CARRIER_FRACTION = 1 / 4


class Normalization(str, Enum):
    UNIT_L2 = "unit-L2"
    UNIT_PEAK = "unit-peak"


@dataclass(frozen=True)
class WavepacketSpec:
    """
    Gaussian packet. `carrier` is k0 on space grids and w0 on time grids;
    `transverse_width` adds a Gaussian profile along a transverse grid.
    `scale` multiplies the normalized packet (0 gives the zero field).
    """
    center: float = 0.0
    width: float = 1.0
    carrier: float = 0.0
    amplitude: Normalization = Normalization.UNIT_L2
    transverse_center: float = 0.0
    transverse_width: Optional[float] = None
    scale: float = 1.0

    def __post_init__(self):
        if not self.width > 0:
            raise ConfigurationError(f"Packet width must be positive, got {self.width}")
        if self.transverse_width is not None and not self.transverse_width > 0:
            raise ConfigurationError(f"Transverse width must be positive, got {self.transverse_width}")
        object.__setattr__(self, "amplitude", _normalization(self.amplitude))

    @classmethod
    def create_from_dict(cls, d: dict) -> 'WavepacketSpec':
        d = {key: value for key, value in d.items() if key != "kind"}
        try:
            return cls(**d)
        except TypeError as e:
            raise ConfigurationError(f"Invalid packet: {e}") from e

    def to_dict(self) -> dict:
        d = asdict(self)
        d["kind"] = "gaussian"
        d["amplitude"] = self.amplitude.value
        return d


@dataclass(frozen=True)
class ModeSuperpositionSpec:
    """Sum of isolated plane-wave modes with seeded random phases; mode j has conjugate value 2*pi*j/L."""
    modes: Tuple[int, ...] = field(default_factory=tuple)
    seed: int = 0
    amplitude: Normalization = Normalization.UNIT_L2
    scale: float = 1.0

    def __post_init__(self):
        if len(self.modes) == 0:
            raise ConfigurationError("Mode superposition needs at least one mode")
        if len(set(self.modes)) != len(self.modes):
            raise ConfigurationError(f"Duplicate modes in {self.modes}")
        object.__setattr__(self, "modes", tuple(int(j) for j in self.modes))
        object.__setattr__(self, "amplitude", _normalization(self.amplitude))

    @classmethod
    def create_from_dict(cls, d: dict) -> 'ModeSuperpositionSpec':
        d = {key: value for key, value in d.items() if key != "kind"}
        if "modes" in d:
            d["modes"] = tuple(d["modes"])
        try:
            return cls(**d)
        except TypeError as e:
            raise ConfigurationError(f"Invalid mode superposition: {e}") from e

    def to_dict(self) -> dict:
        return {
            "kind": "modes",
            "modes": list(self.modes),
            "seed": self.seed,
            "amplitude": self.amplitude.value,
            "scale": self.scale,
        }


PacketSpec = Union[WavepacketSpec, ModeSuperpositionSpec]


def packet_from_dict(d: dict) -> PacketSpec:
    kind = d.get("kind", "gaussian")
    if kind == "gaussian":
        return WavepacketSpec.create_from_dict(d)
    if kind == "modes":
        return ModeSuperpositionSpec.create_from_dict(d)
    raise ConfigurationError(f"Unknown packet kind {kind!r}")


def _normalization(value) -> Normalization:
    try:
        return Normalization(value)
    except ValueError as e:
        raise ConfigurationError(f"Unknown amplitude normalization {value!r}") from e


def _carrier_sign(grid: Grid) -> float:
    return 1.0 if grid.axis_kind is AxisKind.SPACE else -1.0


def _periodic_offset(grid: Grid, center: float) -> np.ndarray:
    offset = grid.coordinates - center
    return (offset + grid.length / 2) % grid.length - grid.length / 2


def _check_fit(width: float, carrier: float, grid: Grid, label: str) -> None:
    if width >= MAX_WIDTH_FRACTION * grid.length:
        raise ConfigurationError(
            f"{label} width {width} does not fit a grid of length {grid.length} (needs < L/8)")
    if abs(carrier) >= MAX_CARRIER_FRACTION * grid.nyquist:
        raise ConfigurationError(
            f"{label} carrier {carrier} too close to Nyquist {grid.nyquist} (needs < 1/4 of it)")


def _normalize(f: ComplexField, amplitude: Normalization, scale: float) -> ComplexField:
    if amplitude is Normalization.UNIT_L2:
        norm = l2_norm(f)
    else:
        norm = float(np.max(np.abs(f.values)))
    return f * (scale / norm)


def make_gaussian_packet(spec: WavepacketSpec, grid: Grid, transverse: Optional[Grid] = None) -> ComplexField:
    _check_fit(spec.width, spec.carrier, grid, "Packet")
    offset = _periodic_offset(grid, spec.center)
    envelope = np.exp(-offset ** 2 / (4 * spec.width ** 2))
    carrier = np.exp(1j * _carrier_sign(grid) * spec.carrier * grid.coordinates)
    values = envelope * carrier
    if transverse is not None:
        width = spec.transverse_width
        if width is None:
            raise ConfigurationError("A transverse grid needs a packet transverse_width")
        _check_fit(width, 0.0, transverse, "Transverse profile")
        profile = np.exp(-_periodic_offset(transverse, spec.transverse_center) ** 2 / (4 * width ** 2))
        values = np.outer(values, profile)
    return _normalize(ComplexField(grid, values, transverse), spec.amplitude, spec.scale)


def make_mode_superposition(spec: ModeSuperpositionSpec, grid: Grid) -> ComplexField:
    limit = MAX_CARRIER_FRACTION * grid.n / 2
    for j in spec.modes:
        if abs(j) >= limit:
            raise ConfigurationError(f"Mode {j} too close to Nyquist for n={grid.n}")
    phases = np.random.default_rng(spec.seed).uniform(0.0, 2 * np.pi, len(spec.modes))
    conjugate = 2 * np.pi * np.asarray(spec.modes, dtype=float) / grid.length
    exponent = _carrier_sign(grid) * np.outer(grid.coordinates, conjugate) + phases
    values = np.exp(1j * exponent).sum(axis=1)
    return _normalize(ComplexField(grid, values), spec.amplitude, spec.scale)


def make_packet(spec: PacketSpec, grid: Grid, transverse: Optional[Grid] = None) -> ComplexField:
    if isinstance(spec, ModeSuperpositionSpec):
        if transverse is not None:
            raise ConfigurationError("Mode superpositions do not support a transverse axis")
        return make_mode_superposition(spec, grid)
    return make_gaussian_packet(spec, grid, transverse)
