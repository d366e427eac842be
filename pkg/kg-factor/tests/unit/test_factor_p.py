import numpy as np
import pytest

from core import (
    AxisKind,
    ComplexField,
    ConfigurationError,
    Constants,
    EvanescentBinError,
    EvanescentContentError,
    Grid,
    WavepacketSpec,
    l2_error,
    l2_norm,
    make_packet,
)
from factor_p import (
    PairStateP,
    PropagationMode,
    apply_W,
    ebar,
    ebar_spectrum,
    masked_energy_fraction,
    p_exact_free_march,
    p_forward_rhs,
    p_pair_rhs,
    p_stability_dz,
    p_step,
    reference_wavevector,
    validity_margin_p,
)
from harness.scans import fit_exponent
from potentials import DynamicPotential, StaticPotential, merge_into_xi


def time_grid(n=1024, length=64.0):
    return Grid(n, length, AxisKind.TIME)


def pulse(grid, carrier=4.0, width=2.0, center=5.0):
    return make_packet(WavepacketSpec(center=center, width=width, carrier=carrier), grid)


def march(p, dz, n_steps, V, consts, mode=PropagationMode.LITERAL, forward_only=False):
    for i in range(n_steps):
        p = p_step(p, dz, V, DynamicPotential.zero(), consts, mode, forward_only, i)
    return p


def pair_distance(a, b):
    return float(np.hypot(l2_error(a.phi_plus, b.phi_plus), l2_error(a.phi_minus, b.phi_minus)))


class TestEbar:
    def setup_method(self):
        self.consts = Constants()

    def test_scalar(self):
        assert ebar(2.0, self.consts) == pytest.approx(np.sqrt(3.0))
        assert ebar(-2.0, self.consts) == pytest.approx(np.sqrt(3.0))
        with pytest.raises(EvanescentBinError):
            ebar(1.0, self.consts)
        assert reference_wavevector(2.0, 0.1, self.consts) == pytest.approx(2.0 * (1 + 0.1 / np.sqrt(3.0)))

    def test_spectrum_masks_evanescent_bins(self):
        grid = time_grid(64, 32.0)
        spectrum = ebar_spectrum(grid, self.consts)
        np.testing.assert_array_equal(spectrum.mask, np.abs(grid.conjugate_axis) <= 1.0 + 1e-6)
        assert np.all(spectrum.values[spectrum.mask] == 0)
        assert np.all(spectrum.inverse[spectrum.mask] == 0)
        propagating = ~spectrum.mask
        np.testing.assert_allclose(spectrum.inverse[propagating] * spectrum.values[propagating], 1.0)
        np.testing.assert_allclose(spectrum.signed, np.sign(grid.conjugate_axis) * spectrum.values)
        with pytest.raises(ConfigurationError):
            ebar_spectrum(Grid(64, 32.0), self.consts)

    def test_masked_energy_fraction(self):
        grid = time_grid()
        spectrum = ebar_spectrum(grid, self.consts)
        assert masked_energy_fraction(pulse(grid), spectrum) < 1e-12
        assert masked_energy_fraction(pulse(grid, carrier=0.2), spectrum) > 0.5
        assert masked_energy_fraction(ComplexField.zeros(grid), spectrum) == 0.0


class TestOperators:
    def setup_method(self):
        self.consts = Constants(m=0.5)
        self.grid = time_grid(256, 64.0)

    def test_constant_v_on_a_mode(self):
        omega = self.grid.conjugate_axis[20]
        f = ComplexField(self.grid, np.exp(-1j * omega * self.grid.coordinates))
        w = apply_W(f, StaticPotential.constant(0.3), DynamicPotential.zero(), self.consts, 0.0)
        np.testing.assert_allclose(w.values, (0.09 - 0.6 * omega) * f.values, atol=1e-12)

    def test_xi_and_transverse_terms(self):
        transverse = Grid(32, 2 * np.pi)
        profile = np.cos(2 * transverse.coordinates)
        f = ComplexField(self.grid, np.outer(np.ones(256), profile), transverse)
        w = apply_W(f, StaticPotential.zero(), DynamicPotential.constant(0.1), self.consts, 0.0)
        expected = (-4.0 - 2 * 0.25 * 0.1) * f.values
        np.testing.assert_allclose(w.values, expected, atol=1e-11)

    def test_cross_drive_of_a_single_mode(self):
        omega = self.grid.conjugate_axis[256 - 20]
        assert omega > 0
        f = ComplexField(self.grid, np.exp(-1j * omega * self.grid.coordinates))
        v0 = 0.05
        d = p_pair_rhs(PairStateP(f, ComplexField.zeros(self.grid)), StaticPotential.constant(v0),
                       DynamicPotential.zero(), self.consts)
        # V0 w / (c Ebar) from the combined time derivatives, less the V0^2 share of W
        drive = v0 * omega / ebar(omega, self.consts) * (1 - v0 / (2 * omega))
        np.testing.assert_allclose(np.abs(d.phi_minus.values), drive, rtol=1e-12)

    def test_time_dependent_v_merges_into_xi(self):
        grid = Grid(1024, 2 * np.pi * 64, AxisKind.TIME)
        consts = Constants()
        omega = grid.conjugate_axis[1024 - 64]
        assert omega == pytest.approx(1.0)
        f = ComplexField(grid, np.exp(-1j * omega * grid.coordinates))
        drift = 1.0 / 64
        dV = DynamicPotential.traveling_wave(1e-4, 0.0, drift)
        direct = apply_W(f, dV, DynamicPotential.zero(), consts, 0.0)
        merged = apply_W(f, StaticPotential.zero(), merge_into_xi(dV, consts), consts, 0.0)
        t = grid.coordinates
        v = 1e-4 * np.cos(drift * t)
        # at hbar w = mc^2 the two differ only by V^2 and the dV/dt term
        residual = (v ** 2 + 1j * 1e-4 * drift * np.sin(drift * t)) * f.values
        np.testing.assert_allclose(direct.values - merged.values, residual, atol=1e-15)
        assert l2_error(direct, merged) / l2_norm(merged) < drift

    def test_static_v_evaluated_at_march_position(self):
        f = ComplexField(self.grid, np.ones(256))
        V = StaticPotential.gaussian_well(0.2, 3.0, 1.0)
        w = apply_W(f, V, DynamicPotential.zero(), self.consts, 3.0)
        np.testing.assert_allclose(w.values, 0.04 * f.values, atol=1e-12)


class TestZMarch:
    def setup_method(self):
        self.V = StaticPotential.zero()
        self.Xi = DynamicPotential.zero()

    def test_massless_pulse_translates(self):
        consts = Constants(m=0.0)
        grid = time_grid()
        packet = pulse(grid)
        p = PairStateP(packet, ComplexField.zeros(grid))
        for i in range(500):
            p = p_step(p, 0.002, self.V, self.Xi, consts, PropagationMode.LITERAL, forward_only=True, step_index=i)
        np.testing.assert_allclose(p.phi_plus.values, np.roll(packet.values, -16), atol=1e-8)
        assert p.z == pytest.approx(1.0)
        assert np.all(p.phi_minus.values == 0)

    def test_exact_free_march_per_mode(self):
        consts = Constants()
        grid = time_grid(256, 64.0)
        omega = grid.conjugate_axis
        for index in (20, 256 - 30):
            mode = ComplexField(grid, np.exp(-1j * omega[index] * grid.coordinates))
            p = p_exact_free_march(PairStateP(mode, mode), 0.7, consts)
            kz = np.sign(omega[index]) * ebar(omega[index], consts)
            np.testing.assert_allclose(p.phi_plus.values, mode.values * np.exp(-1j * kz * 0.7), atol=1e-12)
            np.testing.assert_allclose(p.phi_minus.values, mode.values * np.exp(1j * kz * 0.7), atol=1e-12)

    def test_exact_mode_matches_free_march_without_coupling(self):
        consts = Constants()
        grid = time_grid()
        packet = pulse(grid)
        p = PairStateP(packet, ComplexField.zeros(grid))
        stepped = p_step(p, 0.05, self.V, self.Xi, consts, PropagationMode.EXACT_OMEGA)
        marched = p_exact_free_march(p, 0.05, consts)
        np.testing.assert_allclose(stepped.phi_plus.values, marched.phi_plus.values, atol=1e-13)

    def test_rhs(self):
        consts = Constants(m=0.0)
        grid = time_grid()
        packet = pulse(grid)
        p = PairStateP(packet, packet * 0.5)
        d = p_pair_rhs(p, self.V, self.Xi, consts)
        forward = p_forward_rhs(p, self.V, self.Xi, consts)
        np.testing.assert_allclose(d.phi_plus.values, forward.values, atol=1e-13)
        np.testing.assert_allclose(d.phi_minus.values, -0.5 * forward.values, atol=1e-13)

    def test_literal_march_is_fourth_order(self):
        consts = Constants()
        grid = time_grid(256, 64.0)
        V = StaticPotential.constant(0.1)
        steps = [0.02, 0.01, 0.005, 0.0025]
        assert steps[0] <= p_stability_dz(grid, V, self.Xi, consts)
        start = PairStateP(pulse(grid, carrier=3.0), ComplexField.zeros(grid))
        marched = [march(start, dz, int(round(0.4 / dz)), V, consts) for dz in steps]
        differences = [pair_distance(a, b) for a, b in zip(marched, marched[1:])]
        assert differences[0] / differences[1] == pytest.approx(16.0, rel=0.5)
        assert fit_exponent(steps[:-1], differences) == pytest.approx(4.0, abs=0.3)

    def test_exact_omega_split_is_second_order(self):
        consts = Constants()
        grid = time_grid(256, 64.0)
        V = StaticPotential.constant(0.1)
        mode = PropagationMode.EXACT_OMEGA
        steps = [0.04, 0.02, 0.01, 0.005]
        assert steps[0] <= p_stability_dz(grid, V, self.Xi, consts, mode)
        start = PairStateP(pulse(grid, carrier=3.0), ComplexField.zeros(grid))
        marched = [march(start, dz, int(round(0.4 / dz)), V, consts, mode) for dz in steps]
        differences = [pair_distance(a, b) for a, b in zip(marched, marched[1:])]
        # the free march and the coupling do not commute once phi^- is driven
        assert fit_exponent(steps[:-1], differences) == pytest.approx(2.0, abs=0.3)

    def test_evanescent_content_is_rejected(self):
        consts = Constants()
        grid = time_grid()
        p = PairStateP(pulse(grid, carrier=0.5), ComplexField.zeros(grid))
        with pytest.raises(EvanescentContentError):
            p_step(p, 0.001, self.V, self.Xi, consts)

    def test_stability_bound(self):
        grid = time_grid()
        massless = Constants(m=0.0)
        assert p_stability_dz(grid, self.V, self.Xi, massless) == pytest.approx(0.5 / grid.nyquist)
        assert p_stability_dz(grid, self.V, self.Xi, massless, PropagationMode.EXACT_OMEGA) == float("inf")
        coupled = p_stability_dz(grid, StaticPotential.constant(0.1), self.Xi, Constants(), "exact-ω")
        assert 0 < coupled < float("inf")


class TestValidityP:
    def setup_method(self):
        self.consts = Constants(m=0.0)
        self.grid = time_grid()
        self.packet = pulse(self.grid)

    def test_zero_cases(self):
        V, Xi = StaticPotential.zero(), DynamicPotential.zero()
        zeros = ComplexField.zeros(self.grid)
        report = validity_margin_p(PairStateP(self.packet, self.packet), V, Xi, self.consts)
        assert report.ratio == 0.0
        report = validity_margin_p(PairStateP(self.packet, zeros), StaticPotential.constant(0.2), Xi, self.consts)
        assert report.ratio == 0.0

    def test_small_potential_is_valid(self):
        report = validity_margin_p(PairStateP(self.packet, self.packet), StaticPotential.constant(0.2),
                                   DynamicPotential.zero(), self.consts, threshold=0.1)
        assert 0 < report.ratio < 0.1
        assert report.ok

    def test_margin_tracks_decoupling_error(self):
        consts = Constants()
        grid = time_grid(256, 64.0)
        packet = pulse(grid, carrier=3.0)
        start = PairStateP(packet, ComplexField.zeros(grid))
        ratios, errors = [], []
        for v0 in (0.02, 0.05, 0.1):
            V = StaticPotential.constant(v0)
            coupled = march(start, 0.01, 100, V, consts)
            forward = march(start, 0.01, 100, V, consts, forward_only=True)
            errors.append(l2_error(coupled.phi_plus, forward.phi_plus))
            ratios.append(validity_margin_p(PairStateP(packet, packet), V, DynamicPotential.zero(), consts).ratio)
        assert errors == sorted(errors)
        assert ratios == sorted(ratios)
        assert len(set(errors)) == 3
        # one unit of march distance
        assert all(error < ratio for error, ratio in zip(errors, ratios))
