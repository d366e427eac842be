from dataclasses import dataclass
from typing import Union

import numpy as np

from core import (
    AxisKind,
    ComplexField,
    ConfigurationError,
    Constants,
    EvanescentBinError,
    Grid,
    to_spectrum,
)

EVANESCENT_GUARD = 1e-6
EVANESCENT_TOLERANCE = 1e-10


@dataclass(frozen=True, eq=False)
class EbarSpectrum:
    """
    Ebar(w) = sqrt(hbar^2 w^2 - m^2 c^4) over a time grid's DFT bins.

    Bins with |hbar w| <= mc^2 (1 + guard) are masked: their Ebar, signed
    Ebar and inverse are all zero, so divisions never touch them.
    """
    omega: np.ndarray
    values: np.ndarray
    signed: np.ndarray
    inverse: np.ndarray
    mask: np.ndarray


def ebar(omega: float, consts: Constants) -> float:
    if abs(consts.hbar * omega) <= consts.rest_energy * (1 + EVANESCENT_GUARD):
        raise EvanescentBinError(f"Frequency {omega} lies in the evanescent band")
    return float(np.sqrt((consts.hbar * omega) ** 2 - consts.rest_energy ** 2))


def ebar_spectrum(grid: Grid, consts: Constants, guard: float = EVANESCENT_GUARD) -> EbarSpectrum:
    if grid.axis_kind is not AxisKind.TIME:
        raise ConfigurationError("Ebar is defined over a time grid")
    omega = grid.conjugate_axis
    energy = consts.hbar * np.abs(omega)
    mask = energy <= consts.rest_energy * (1 + guard)
    values = np.where(mask, 0.0, np.sqrt(np.maximum(energy ** 2 - consts.rest_energy ** 2, 0.0)))
    inverse = np.zeros_like(values)
    np.divide(1.0, values, out=inverse, where=~mask)
    return EbarSpectrum(omega, values, np.sign(omega) * values, inverse, mask)


def masked_energy_fraction(f: Union[ComplexField, np.ndarray], spectrum: EbarSpectrum) -> float:
    values = f.values if isinstance(f, ComplexField) else f
    power = np.abs(to_spectrum(values)) ** 2
    if power.ndim > 1:
        power = power.sum(axis=tuple(range(1, power.ndim)))
    total = power.sum()
    if total == 0:
        return 0.0
    return float(power[spectrum.mask].sum() / total)


def reference_wavevector(omega, v_at_omega, consts: Constants):
    """K(w) = (w / c) [1 + V / Ebar(w)]."""
    return omega / consts.c * (1 + v_at_omega / ebar(omega, consts))
