import numpy as np

from core import ComplexField, ConfigurationError, Constants, to_spectrum
from .state import KGState


def kg_energy(s: KGState, consts: Constants) -> float:
    """
    Discrete KG energy sum[|chi|^2 + m^2 c^4 |phi|^2 + hbar^2 c^2 |d phi/dx|^2] dx,
    evaluated from the DFT coefficients so the gradient term is exact.
    """
    grid = s.phi.grid
    phi_hat = to_spectrum(s.phi.values)
    chi_hat = to_spectrum(s.chi.values)
    k = grid.angular_frequencies
    weight = consts.rest_energy ** 2 + (consts.hbar * consts.c * k) ** 2
    total = np.sum(np.abs(chi_hat) ** 2 + weight * np.abs(phi_hat) ** 2)
    return float(total * grid.spacing / grid.n)


def light_cone_mass(f: ComplexField, x0: float, t: float, consts: Constants, margin: float = 0.0) -> float:
    """Fraction of sum |f|^2 at periodic distance > c t + margin from x0."""
    if t < 0:
        raise ConfigurationError(f"Light cone needs t >= 0, got {t}")
    density = np.abs(f.values) ** 2
    total = density.sum()
    if total == 0:
        return 0.0
    outside = f.grid.periodic_distance(x0) > consts.c * t + margin
    return float(density[outside].sum() / total)
