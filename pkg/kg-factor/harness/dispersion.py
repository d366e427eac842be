from typing import List, Optional, Tuple

import numpy as np

from config import SimConfig, Solver
from core import (
    ConfigurationError,
    InsufficientSamplesError,
    kg_dispersion_omega,
    schrodinger_dispersion_energy,
    to_spectrum,
)
from factor_m import schrodinger_energy
from factor_p import PropagationMode, ebar_spectrum
from potentials import DynamicPotential, StaticPotential
from .results import SimResult

MINIMUM_DISPERSION_SAMPLES = 4
# bins weaker than this fraction of the strongest initial bin carry no usable phase
DEFAULT_AMPLITUDE_THRESHOLD = 1e-3


def dispersion_extract(result: SimResult,
                       threshold: float = DEFAULT_AMPLITUDE_THRESHOLD) -> List[Tuple[float, float]]:
    """
    Per-bin phase rate of phi: the unwrapped phase of every populated bin of
    the conjugate axis is fitted against t (or z) and the rate is minus the
    slope, so a mode e^{-i rate t} reports `rate`. Returns (k or w, rate)
    pairs sorted by the conjugate coordinate.
    """
    snapshots = result.snapshots.get("phi", [])
    if len(snapshots) < MINIMUM_DISPERSION_SAMPLES:
        raise InsufficientSamplesError(
            f"Dispersion fit needs at least {MINIMUM_DISPERSION_SAMPLES} samples, got {len(snapshots)}")
    grid = snapshots[0].grid
    if snapshots[0].transverse is not None:
        raise ConfigurationError("Dispersion extraction is defined for fields without a transverse axis")

    spectra = np.array([to_spectrum(f.values) for f in snapshots])
    magnitude = np.abs(spectra[0])
    if magnitude.max() == 0:
        raise InsufficientSamplesError("Initial field is zero; no phase to fit")
    keep = magnitude >= threshold * magnitude.max()
    config = result.config
    if config.solver.is_p:
        keep &= ~ebar_spectrum(grid, config.constants).mask

    phase = np.unwrap(np.angle(spectra[:, keep]), axis=0)
    slopes = np.polyfit(np.asarray(result.coordinates, dtype=float), phase, 1)[0]
    axis = grid.conjugate_axis[keep]
    order = np.argsort(axis, kind="stable")
    return [(float(axis[j]), float(-slopes[j])) for j in order]


def _uniform_value(profile) -> Optional[float]:
    if isinstance(profile, (StaticPotential, DynamicPotential)) and profile.is_uniform:
        return 0.0 if profile.is_zero else float(profile.value)
    return None


def expected_dispersion(config: SimConfig, coordinates: np.ndarray) -> Optional[np.ndarray]:
    """
    Closed-form rate at the given conjugate coordinates for the run's solver,
    or None when the potentials leave no closed form (non-uniform V or Xi,
    or couplings that mix the two branches).
    """
    v0 = _uniform_value(config.potential)
    xi0 = _uniform_value(config.xi)
    if v0 is None or xi0 is None:
        return None
    consts = config.constants
    hbar, c = consts.hbar, consts.c
    coordinates = np.asarray(coordinates, dtype=float)
    solver = config.solver

    if solver in (Solver.KG, Solver.PAIR_M):
        if v0 != 0 or xi0 != 0:
            return None
        return kg_dispersion_omega(coordinates, consts)
    if solver is Solver.SCHRODINGER:
        return schrodinger_energy(coordinates, v0, xi0, consts) / hbar
    if solver is Solver.M_WITH_MASS:
        return schrodinger_dispersion_energy(coordinates, v0, xi0, consts) / hbar
    if solver is Solver.PAIR_P and (v0 != 0 or xi0 != 0):
        return None

    # forward_p, or pair_p without coupling: the leading rate plus the uniform coupling shift
    omega = coordinates
    ebar = np.sqrt(np.maximum((hbar * omega) ** 2 - consts.rest_energy ** 2, 0.0))
    if np.any(ebar == 0):
        raise ConfigurationError("Expected dispersion requested on an evanescent frequency")
    if config.p_mode is PropagationMode.LITERAL:
        leading = omega / c
    else:
        leading = np.sign(omega) * ebar / (hbar * c)
    w = v0 ** 2 - 2 * hbar * omega * v0 - 2 * consts.rest_energy ** 2 * xi0
    return leading - w / (2 * hbar * c * ebar)
