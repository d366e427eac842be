import numpy as np

from core import (
    ComplexField,
    ConfigurationError,
    Constants,
    DivergenceError,
    Grid,
    all_finite,
    from_spectrum,
    schrodinger_dispersion_energy,
    to_spectrum,
)
from potentials import DynamicPotential, StaticPotential, eval_dynamic, eval_static
from .state import PairStateM

FORWARD = 1
BACKWARD = -1


def _split_step(values: np.ndarray, potential: np.ndarray, kinetic_sign: float, grid: Grid,
                dt: float, consts: Constants) -> np.ndarray:
    hbar = consts.hbar
    half_potential = np.exp(-0.5j * potential * dt / hbar)
    k = grid.angular_frequencies
    kinetic = np.exp(-1j * kinetic_sign * hbar * k ** 2 * dt / (2 * consts.m))
    return half_potential * from_spectrum(kinetic * to_spectrum(half_potential * values))


def _check_step(dt: float, consts: Constants, operation: str) -> None:
    consts.require_mass(operation)
    if not dt > 0:
        raise ConfigurationError(f"{operation} needs dt > 0, got {dt}")


def schrodinger_step(psi: ComplexField, dt: float, V: StaticPotential, Xi: DynamicPotential,
                     consts: Constants, t: float = 0.0, direction: int = FORWARD,
                     step_index: int = 0) -> ComplexField:
    """
    One Strang step of
        i hbar dpsi/dt = [V +- mc^2 Xi] psi -+ (hbar^2 / 2m) d2psi/dx2
    with the upper sign for direction=+1. Xi is sampled at t + dt/2.
    """
    _check_step(dt, consts, "schrodinger_step")
    if direction not in (FORWARD, BACKWARD):
        raise ConfigurationError(f"direction must be +1 or -1, got {direction}")
    grid = psi.grid
    xi = eval_dynamic(Xi, grid, t + dt / 2)
    potential = eval_static(V, grid) + direction * consts.rest_energy * xi
    values = _split_step(psi.values, potential, direction, grid, dt, consts)
    if not all_finite(values):
        raise DivergenceError(step_index)
    return psi.with_values(values)


def m_equation_with_mass_step(p: PairStateM, dt: float, V: StaticPotential, Xi: DynamicPotential,
                              consts: Constants, step_index: int = 0) -> PairStateM:
    """
    Decoupled pair with the rest mass kept:
        i hbar d/dt phi_+- = (+-mc^2 + V +- mc^2 Xi) phi_+- -+ (hbar^2 / 2m) d2/dx2 phi_+-
    """
    _check_step(dt, consts, "m_equation_with_mass_step")
    grid = p.phi_plus.grid
    rest = consts.rest_energy
    v = eval_static(V, grid)
    xi = eval_dynamic(Xi, grid, p.t + dt / 2)
    plus = _split_step(p.phi_plus.values, rest + v + rest * xi, FORWARD, grid, dt, consts)
    minus = _split_step(p.phi_minus.values, -rest + v - rest * xi, BACKWARD, grid, dt, consts)
    if not all_finite(plus, minus):
        raise DivergenceError(step_index)
    return PairStateM(p.phi_plus.with_values(plus), p.phi_minus.with_values(minus), p.t + dt)


def schrodinger_energy(k, v0: float, xi0: float, consts: Constants):
    """E - mc^2 for constant potentials: the phase rate of psi after rest-mass removal, times hbar."""
    return schrodinger_dispersion_energy(k, v0, xi0, consts) - consts.rest_energy
