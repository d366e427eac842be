from typing import Optional, Sequence, Tuple

import numpy as np

from core import (
    ComplexField,
    ConfigurationError,
    Constants,
    DivergenceError,
    EvanescentContentError,
    Grid,
    UndefinedRatioError,
    all_finite,
    derivative_values,
    from_spectrum,
    rk4_step,
    to_spectrum,
)
from factor_m import DEFAULT_VALIDITY_THRESHOLD, ValidityReport
from potentials import DynamicPotential, eval_dynamic
from .operators import SalpeterProfile, salpeter_bound, salpeter_samples, w_values
from .spectrum import EVANESCENT_TOLERANCE, EbarSpectrum, ebar_spectrum, masked_energy_fraction
from .state import PairStateP, PropagationMode

STABILITY_FACTOR = 0.5


def _per_bin(weights: np.ndarray, values: np.ndarray) -> np.ndarray:
    return weights[:, np.newaxis] if values.ndim == 2 else weights


def _inverse_ebar(spectrum: EbarSpectrum, values: np.ndarray) -> np.ndarray:
    return from_spectrum(_per_bin(spectrum.inverse, values) * to_spectrum(values))


def _require_propagating(spectrum: EbarSpectrum, *fields: ComplexField) -> None:
    for f in fields:
        fraction = masked_energy_fraction(f, spectrum)
        if fraction > EVANESCENT_TOLERANCE:
            raise EvanescentContentError(
                f"{fraction:.3e} of the field energy sits in evanescent bins (limit {EVANESCENT_TOLERANCE:.0e})")


class _ZMarch:
    """Right-hand side of the z-marched pair for one grid, potential profile and mode."""

    def __init__(self, grid: Grid, transverse: Optional[Grid], V: SalpeterProfile, Xi: DynamicPotential,
                 consts: Constants, mode: PropagationMode, forward_only: bool):
        self._grid = grid
        self._transverse = transverse
        self._V = V
        self._Xi = Xi
        self._consts = consts
        self.mode = mode
        self._forward_only = forward_only
        self.spectrum = ebar_spectrum(grid, consts)

    def leading(self, values: np.ndarray) -> np.ndarray:
        c = self._consts.c
        if self.mode is PropagationMode.LITERAL:
            return derivative_values(values, self._grid, 1) / c
        rate = -1j * self.spectrum.signed / (self._consts.hbar * c)
        return from_spectrum(_per_bin(rate, values) * to_spectrum(values))

    def coupling(self, total: np.ndarray, z: float) -> np.ndarray:
        v = salpeter_samples(self._V, self._grid, z)
        xi = eval_dynamic(self._Xi, self._grid, z)
        w = w_values(total, v, xi, self._grid, self._transverse, self._consts)
        return (1j / (2 * self._consts.hbar * self._consts.c)) * _inverse_ebar(self.spectrum, w)

    def derivative(self, z: float, state: Tuple[np.ndarray, np.ndarray],
                   with_leading: bool = True) -> Tuple[np.ndarray, np.ndarray]:
        plus, minus = state
        if self._forward_only:
            coupling = self.coupling(plus, z)
            dplus = self.leading(plus) + coupling if with_leading else coupling
            return dplus, np.zeros_like(minus)
        coupling = self.coupling(plus + minus, z)
        if not with_leading:
            return coupling, -coupling
        return self.leading(plus) + coupling, -self.leading(minus) - coupling

    def free_march(self, plus: np.ndarray, minus: np.ndarray, dz: float) -> Tuple[np.ndarray, np.ndarray]:
        phase = self.spectrum.signed * dz / (self._consts.hbar * self._consts.c)
        forward = _per_bin(np.exp(-1j * phase), plus)
        plus = from_spectrum(forward * to_spectrum(plus))
        minus = from_spectrum(np.conj(forward) * to_spectrum(minus))
        return plus, minus


def _march_for(p: PairStateP, V: SalpeterProfile, Xi: DynamicPotential, consts: Constants,
               mode: PropagationMode, forward_only: bool) -> _ZMarch:
    grid = p.phi_plus.grid
    march = _ZMarch(grid, p.phi_plus.transverse, V, Xi, consts, PropagationMode.parse(mode), forward_only)
    _require_propagating(march.spectrum, p.phi_plus, p.phi_minus)
    return march


def p_pair_rhs(p: PairStateP, V: SalpeterProfile, Xi: DynamicPotential, consts: Constants,
               mode: PropagationMode = PropagationMode.LITERAL) -> PairStateP:
    """
    z-derivative of the coupled pair:
        d/dz phi^+- = +-L phi^+- +- (i / 2 hbar c) Ebar^-1 [W (phi^+ + phi^-)]
    with L = (1/c) d/dt in literal mode and -i Ebar_signed / (hbar c) per bin in
    exact-omega mode. Ebar^-1 acts last, per bin of the time spectrum.
    """
    march = _march_for(p, V, Xi, consts, mode, forward_only=False)
    dplus, dminus = march.derivative(p.z, (p.phi_plus.values, p.phi_minus.values))
    return PairStateP(p.phi_plus.with_values(dplus), p.phi_minus.with_values(dminus), p.z)


def p_forward_rhs(p: PairStateP, V: SalpeterProfile, Xi: DynamicPotential, consts: Constants,
                  mode: PropagationMode = PropagationMode.LITERAL) -> ComplexField:
    """Decoupled forward equation: the phi^+ row of p_pair_rhs with phi^- dropped."""
    march = _march_for(p, V, Xi, consts, mode, forward_only=True)
    dplus, _ = march.derivative(p.z, (p.phi_plus.values, np.zeros_like(p.phi_plus.values)))
    return p.phi_plus.with_values(dplus)


def p_exact_free_march(p: PairStateP, dz: float, consts: Constants) -> PairStateP:
    """Free propagation exact per bin: phi^+- hat(w) times exp(-+i Ebar_signed(w) dz / hbar c)."""
    march = _march_for(p, DynamicPotential.zero(), DynamicPotential.zero(), consts,
                       PropagationMode.EXACT_OMEGA, forward_only=False)
    plus, minus = march.free_march(p.phi_plus.values, p.phi_minus.values, dz)
    return PairStateP(p.phi_plus.with_values(plus), p.phi_minus.with_values(minus), p.z + dz)


def p_step(p: PairStateP, dz: float, V: SalpeterProfile, Xi: DynamicPotential, consts: Constants,
           mode: PropagationMode = PropagationMode.LITERAL, forward_only: bool = False,
           step_index: int = 0) -> PairStateP:
    """
    Advance by dz. Literal mode is one RK4 step of the full right-hand side;
    exact-omega mode is a Strang split: half free march, RK4 on the coupling,
    half free march.
    """
    march = _march_for(p, V, Xi, consts, mode, forward_only)
    state = (p.phi_plus.values, p.phi_minus.values)
    if march.mode is PropagationMode.LITERAL:
        plus, minus = rk4_step(march.derivative, state, p.z, dz)
    else:
        plus, minus = march.free_march(*state, dz / 2)
        plus, minus = rk4_step(lambda z, s: march.derivative(z, s, with_leading=False), (plus, minus), p.z, dz)
        plus, minus = march.free_march(plus, minus, dz / 2)
    if forward_only:
        minus = np.zeros_like(minus)
    if not all_finite(plus, minus):
        raise DivergenceError(step_index)
    return PairStateP(p.phi_plus.with_values(plus), p.phi_minus.with_values(minus), p.z + dz)


def p_stability_dz(grid: Grid, V: SalpeterProfile, Xi: DynamicPotential, consts: Constants,
                   mode: PropagationMode = PropagationMode.LITERAL, transverse: Optional[Grid] = None,
                   positions: Sequence[float] = (0.0,)) -> float:
    """
    dz bound 0.5 / kappa_max. kappa_max adds the leading rate (w_Nyquist / c,
    literal mode only) to a bound on the coupling rate |W| / (2 hbar c Ebar_min),
    with V bounded over the given march positions.
    """
    spectrum = ebar_spectrum(grid, consts)
    propagating = ~spectrum.mask
    if not propagating.any():
        raise ConfigurationError("Every bin of the time grid is evanescent")
    hbar, c = consts.hbar, consts.c
    omega_max = grid.nyquist
    v_max = salpeter_bound(V, np.asarray(positions, dtype=float))
    w_max = v_max ** 2 + 2 * hbar * omega_max * v_max + 2 * consts.rest_energy ** 2 * Xi.bound
    if transverse is not None:
        w_max += (hbar * c * transverse.nyquist) ** 2
    kappa = w_max / (2 * hbar * c * spectrum.values[propagating].min())
    if PropagationMode.parse(mode) is PropagationMode.LITERAL:
        kappa += omega_max / c
    if kappa == 0:
        return float("inf")
    return STABILITY_FACTOR / kappa


def validity_margin_p(p: PairStateP, V: SalpeterProfile, Xi: DynamicPotential, consts: Constants,
                      threshold: float = DEFAULT_VALIDITY_THRESHOLD) -> ValidityReport:
    """
    ratio = |(1 / 2 hbar c) Ebar^-1 W phi^-+| / |(1/c)(d/dt phi^+- + Ebar^-1 [V d/dt phi^+-])|, worse sign.
    """
    grid = p.phi_plus.grid
    march = _march_for(p, V, Xi, consts, PropagationMode.LITERAL, forward_only=False)
    v = salpeter_samples(V, grid, p.z)
    xi = eval_dynamic(Xi, grid, p.z)
    hbar, c = consts.hbar, consts.c

    ratios = []
    for own, other in ((p.phi_plus, p.phi_minus), (p.phi_minus, p.phi_plus)):
        d_own = derivative_values(own.values, grid, 1)
        kept = (d_own + _inverse_ebar(march.spectrum, _per_bin(v, d_own) * d_own)) / c
        kept_norm = np.linalg.norm(kept)
        if kept_norm == 0:
            continue
        w = w_values(other.values, v, xi, grid, own.transverse, consts)
        drive = _inverse_ebar(march.spectrum, w) / (2 * hbar * c)
        ratios.append(float(np.linalg.norm(drive) / kept_norm))
    if not ratios:
        raise UndefinedRatioError("Both pair components are stationary; validity ratio is undefined")
    return ValidityReport(max(ratios), threshold)
