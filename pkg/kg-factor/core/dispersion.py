from typing import Union

import numpy as np

from .constants import Constants

ArrayLike = Union[float, np.ndarray]


def kg_dispersion_omega(k: ArrayLike, consts: Constants) -> ArrayLike:
    """Positive-branch Klein-Gordon frequency sqrt(c^2 k^2 + m^2 c^4 / hbar^2)."""
    c, m, hbar = consts.c, consts.m, consts.hbar
    return np.sqrt(c ** 2 * np.square(k) + (m * c ** 2 / hbar) ** 2)


def schrodinger_dispersion_energy(k: ArrayLike, v0: float, xi0: float, consts: Constants) -> ArrayLike:
    """Non-relativistic energy with the rest mass retained: mc^2 + V0 + mc^2 Xi0 + hbar^2 k^2 / 2m."""
    consts.require_mass("schrodinger_dispersion_energy")
    rest = consts.rest_energy
    return rest + v0 + rest * xi0 + consts.hbar ** 2 * np.square(k) / (2 * consts.m)
