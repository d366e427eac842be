import numpy as np

from .field import ComplexField
from .spectral import to_spectrum
from .errors import ConfigurationError


def l2_norm(f: ComplexField) -> float:
    return float(np.sqrt(np.sum(np.abs(f.values) ** 2) * f.cell_volume))


def l2_norm_spectral(f: ComplexField) -> float:
    """Same norm evaluated from the DFT coefficients (Parseval)."""
    spectrum = to_spectrum(f.values, axis=0)
    if f.transverse is not None:
        spectrum = to_spectrum(spectrum, axis=1)
    return float(np.sqrt(np.sum(np.abs(spectrum) ** 2) * f.cell_volume / spectrum.size))


def l2_error(f: ComplexField, g: ComplexField) -> float:
    f.require_same_grid(g)
    return l2_norm(f - g)


def support_radius(f: ComplexField, x0: float, fraction: float) -> float:
    """
    Smallest periodic distance from x0 whose ball holds `fraction` of sum |f|^2.

    Distances are measured along the primary axis. Returns 0 for a zero field.
    """
    if not 0 < fraction <= 1:
        raise ConfigurationError(f"Support fraction must be in (0, 1], got {fraction}")
    density = np.abs(f.values) ** 2
    if f.transverse is not None:
        density = density.sum(axis=1)
    total = density.sum()
    if total == 0:
        return 0.0
    distance = f.grid.periodic_distance(x0)
    order = np.argsort(distance, kind="stable")
    cumulative = np.cumsum(density[order]) / total
    index = int(np.searchsorted(cumulative, fraction, side="left"))
    index = min(index, len(order) - 1)
    return float(distance[order[index]])
