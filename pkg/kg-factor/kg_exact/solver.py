from typing import Tuple

import numpy as np

from core import (
    ComplexField,
    Constants,
    DivergenceError,
    Grid,
    all_finite,
    derivative_values,
    from_spectrum,
    kg_dispersion_omega,
    rk4_step,
    to_spectrum,
)
from potentials import DynamicPotential, StaticPotential, eval_dynamic, eval_static, static_bound
from .state import KGState

STABILITY_FACTOR = 0.5


def _derivative(phi: np.ndarray, chi: np.ndarray, v: np.ndarray, xi: np.ndarray,
                grid: Grid, consts: Constants) -> Tuple[np.ndarray, np.ndarray]:
    hbar, c, m = consts.hbar, consts.c, consts.m
    laplacian = derivative_values(phi, grid, 2)
    mass_term = (m * c ** 2) ** 2 * (1 + 2 * xi) * phi
    dphi = (-1j / hbar) * (v * phi + chi)
    dchi = (-1j / hbar) * (v * chi + mass_term - (hbar * c) ** 2 * laplacian)
    return dphi, dchi


def kg_rhs(s: KGState, V: StaticPotential, Xi: DynamicPotential, consts: Constants) -> KGState:
    """
    Time derivative of the reduced state:
        i hbar dphi/dt = V phi + chi
        i hbar dchi/dt = V chi + [m^2 c^4 (1 + 2 Xi) - hbar^2 c^2 d2/dx2] phi
    """
    grid = s.phi.grid
    dphi, dchi = _derivative(s.phi.values, s.chi.values, eval_static(V, grid),
                             eval_dynamic(Xi, grid, s.t), grid, consts)
    return KGState(s.phi.with_values(dphi), s.chi.with_values(dchi), s.t)


def kg_step(s: KGState, dt: float, V: StaticPotential, Xi: DynamicPotential, consts: Constants,
            step_index: int = 0) -> KGState:
    grid = s.phi.grid
    v = eval_static(V, grid)

    def rhs(t, state):
        phi, chi = state
        return _derivative(phi, chi, v, eval_dynamic(Xi, grid, t), grid, consts)

    phi, chi = rk4_step(rhs, (s.phi.values, s.chi.values), s.t, dt)
    if not all_finite(phi, chi):
        raise DivergenceError(step_index)
    return KGState(s.phi.with_values(phi), s.chi.with_values(chi), s.t + dt)


def kg_stability_dt(grid: Grid, V: StaticPotential, Xi: DynamicPotential, consts: Constants) -> float:
    omega_max = (kg_dispersion_omega(grid.nyquist, consts)
                 + static_bound(V, grid) / consts.hbar
                 + consts.rest_energy * 2 * Xi.bound / consts.hbar)
    return STABILITY_FACTOR / omega_max


def kg_init_forward(packet: ComplexField, consts: Constants) -> KGState:
    """Positive-frequency free projection: chi_hat(k) = hbar omega(k) phi_hat(k)."""
    omega = kg_dispersion_omega(packet.grid.conjugate_axis, consts)
    chi = from_spectrum(consts.hbar * omega * to_spectrum(packet.values))
    return KGState(packet, packet.with_values(chi))


def kg_init_pure_plus(packet: ComplexField, consts: Constants) -> KGState:
    """Local initial data chi = mc^2 phi, whose backward component vanishes exactly."""
    consts.require_mass("kg_init_pure_plus")
    return KGState(packet, packet * consts.rest_energy)
