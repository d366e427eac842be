from typing import Optional, Tuple

import numpy as np

from core import (
    Constants,
    DivergenceError,
    Grid,
    UndefinedRatioError,
    all_finite,
    derivative_values,
    rk4_step,
)
from kg_exact import KGState
from potentials import DynamicPotential, StaticPotential, eval_dynamic, eval_static
from .state import DEFAULT_VALIDITY_THRESHOLD, PairStateM, ValidityReport


def pair_from_kg(s: KGState, consts: Constants) -> PairStateM:
    """phi_plus/minus = (phi +- chi / mc^2) / 2."""
    consts.require_mass("pair_from_kg")
    scaled_chi = s.chi / consts.rest_energy
    return PairStateM((s.phi + scaled_chi) * 0.5, (s.phi - scaled_chi) * 0.5, s.t)


def kg_from_pair(p: PairStateM, consts: Constants) -> KGState:
    """Inverse of pair_from_kg: phi = phi_plus + phi_minus, chi = mc^2 (phi_plus - phi_minus)."""
    consts.require_mass("kg_from_pair")
    return KGState(p.phi_plus + p.phi_minus, (p.phi_plus - p.phi_minus) * consts.rest_energy, p.t)


def _derivative(plus: np.ndarray, minus: np.ndarray, v: np.ndarray, xi: np.ndarray,
                grid: Grid, consts: Constants) -> Tuple[np.ndarray, np.ndarray]:
    hbar, m = consts.hbar, consts.m
    rest = consts.rest_energy
    total = plus + minus
    coupling = rest * xi * total - hbar ** 2 / (2 * m) * derivative_values(total, grid, 2)
    dplus = (-1j / hbar) * (rest * plus + v * plus + coupling)
    dminus = (-1j / hbar) * (-rest * minus + v * minus - coupling)
    return dplus, dminus


def pair_rhs_m(p: PairStateM, V: StaticPotential, Xi: DynamicPotential, consts: Constants) -> PairStateM:
    """
    Exact coupled pair:
        i hbar d/dt phi_+- = +-mc^2 phi_+- + V phi_+- +- (mc^2 Xi - hbar^2/2m d2/dx2)(phi_+ + phi_-)
    """
    consts.require_mass("pair_rhs_m")
    grid = p.phi_plus.grid
    dplus, dminus = _derivative(p.phi_plus.values, p.phi_minus.values, eval_static(V, grid),
                                eval_dynamic(Xi, grid, p.t), grid, consts)
    return PairStateM(p.phi_plus.with_values(dplus), p.phi_minus.with_values(dminus), p.t)


def pair_step_m(p: PairStateM, dt: float, V: StaticPotential, Xi: DynamicPotential, consts: Constants,
                step_index: int = 0) -> PairStateM:
    consts.require_mass("pair_step_m")
    grid = p.phi_plus.grid
    v = eval_static(V, grid)

    def rhs(t, state):
        plus, minus = state
        return _derivative(plus, minus, v, eval_dynamic(Xi, grid, t), grid, consts)

    plus, minus = rk4_step(rhs, (p.phi_plus.values, p.phi_minus.values), p.t, dt)
    if not all_finite(plus, minus):
        raise DivergenceError(step_index)
    return PairStateM(p.phi_plus.with_values(plus), p.phi_minus.with_values(minus), p.t + dt)


def validity_margin_m(p: PairStateM, V: StaticPotential, Xi: DynamicPotential, consts: Constants,
                      threshold: float = DEFAULT_VALIDITY_THRESHOLD) -> ValidityReport:
    """
    ratio = |(Xi - hbar^2/(2 m^2 c^2) d2/dx2) phi_-+| / |(1 +- V/mc^2) phi_+-|, worse sign.

    A sign whose kept term vanishes is skipped; if both vanish the ratio is undefined.
    """
    consts.require_mass("validity_margin_m")
    grid = p.phi_plus.grid
    rest = consts.rest_energy
    v = eval_static(V, grid)
    xi = eval_dynamic(Xi, grid, p.t)
    scale = consts.hbar ** 2 / (2 * consts.m ** 2 * consts.c ** 2)

    ratios = []
    for sign, own, other in ((1.0, p.phi_plus, p.phi_minus), (-1.0, p.phi_minus, p.phi_plus)):
        kept = np.linalg.norm((1 + sign * v / rest) * own.values)
        if kept == 0:
            continue
        drive = xi * other.values - scale * derivative_values(other.values, grid, 2)
        ratios.append(float(np.linalg.norm(drive) / kept))
    if not ratios:
        raise UndefinedRatioError("Both pair components vanish; validity ratio is undefined")
    return ValidityReport(max(ratios), threshold)


def remove_rest_mass_phase(p: PairStateM, consts: Constants, t: Optional[float] = None) -> PairStateM:
    """psi_+- = phi_+- exp(+-i mc^2 t / hbar); t defaults to the state's own time."""
    consts.require_mass("remove_rest_mass_phase")
    t = p.t if t is None else t
    phase = np.exp(1j * consts.rest_energy * t / consts.hbar)
    return PairStateM(p.phi_plus * phase, p.phi_minus * np.conj(phase), p.t)
