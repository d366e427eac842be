import logging
import math

import numpy as np
import pytest

from config import SimConfig
from core import (
    ConfigurationError,
    DegenerateScanError,
    GridMismatchError,
    InsufficientSamplesError,
    ValidityThresholdError,
)
from harness import (
    Alignment,
    compare,
    convergence_scan,
    dispersion_extract,
    expected_dispersion,
    fit_exponent,
    resonance_scan,
    run,
)
from harness.output import write_run
from storage import ResultWriter, read_series, read_table


def config(**changes) -> SimConfig:
    d = {
        "solver": "kg",
        "grid": {"n": 128, "length": 64.0},
        "packet": {"center": 0.0, "width": 2.0, "carrier": 0.3},
        "duration": 0.5,
        "step": 0.01,
        "cadence": 10,
    }
    d.update(changes)
    return SimConfig.create_from_dict(d)


def modes_config(**changes) -> SimConfig:
    return config(grid={"n": 64, "length": 64.0},
                  packet={"kind": "modes", "modes": [1, 2, 3, 4, 5, 6, 7, -3]},
                  duration=2.0, **changes)


class TestRunner:
    def setup_method(self):
        logging.disable(logging.CRITICAL)

    def teardown_method(self):
        logging.disable(logging.NOTSET)

    def test_records_at_cadence(self):
        result = run(config())
        assert result.step_indices == [0, 10, 20, 30, 40, 50]
        assert np.all(np.diff(result.coordinates) > 0)
        assert result.coordinates[-1] == pytest.approx(0.5)
        assert set(result.series) == {"norm_phi", "norm_plus", "norm_minus", "light_cone_mass", "energy",
                                      "validity"}
        assert len(result.snapshots["phi"]) == 6
        assert result.coordinate_name == "t"

    def test_zero_field(self):
        result = run(config(packet={"width": 2.0, "scale": 0.0}))
        for name in ("norm_phi", "norm_plus", "norm_minus", "energy", "validity"):
            np.testing.assert_array_equal(result.series[name], 0.0)

    def test_deterministic(self):
        first, second = run(config()), run(config())
        for name, values in first.series.items():
            np.testing.assert_array_equal(values, second.series[name])
        np.testing.assert_array_equal(first.snapshots["phi"][-1].values, second.snapshots["phi"][-1].values)

    def test_massless_kg_has_no_pair(self):
        result = run(config(constants={"m": 0.0}))
        assert "validity" not in result.series
        assert "phi_plus" not in result.snapshots

    def test_norm_drift(self):
        result = run(config(packet={"center": 0.0, "width": 2.0, "carrier": 0.1}, duration=5.0, cadence=100))
        norms = result.series["norm_phi"]
        energy = result.series["energy"]
        assert abs(norms[-1] - norms[0]) < 1e-8
        assert abs(energy[-1] - energy[0]) / energy[0] < 1e-8

    def test_validity_is_recorded_not_enforced(self):
        result = run(config(solver="pair_m", validity_threshold=1e-6))
        assert np.all(result.series["validity"] > 1e-6)

    def test_enforced_validity(self):
        with pytest.raises(ValidityThresholdError) as e:
            run(config(solver="pair_m", validity_threshold=1e-6, enforce_validity=True))
        assert e.value.step_index == 0

    def test_p_run(self):
        result = run(SimConfig.create_from_dict({
            "solver": "pair_p",
            "constants": {"m": 0.0},
            "grid": {"n": 256, "length": 64.0, "axis": "time"},
            "packet": {"center": 5.0, "width": 2.0, "carrier": 2.0},
            "duration": 0.1,
            "step": 0.01,
            "cadence": 5,
        }))
        assert result.coordinate_name == "z"
        assert "light_cone_mass" not in result.series
        np.testing.assert_array_equal(result.series["norm_minus"], 0.0)
        np.testing.assert_array_equal(result.series["validity"], 0.0)


class TestDispersionExtract:
    def setup_method(self):
        logging.disable(logging.CRITICAL)

    def teardown_method(self):
        logging.disable(logging.NOTSET)

    def test_kg_modes(self):
        result = run(modes_config())
        assert len(result.dispersion) == 8
        coordinates = np.array([k for k, _ in result.dispersion])
        rates = np.array([rate for _, rate in result.dispersion])
        np.testing.assert_allclose(rates, expected_dispersion(result.config, coordinates), rtol=1e-6)
        assert list(coordinates) == sorted(coordinates)

    def test_schrodinger_modes(self):
        result = run(modes_config(solver="schrodinger"))
        coordinates = np.array([k for k, _ in result.dispersion])
        rates = np.array([rate for _, rate in result.dispersion])
        np.testing.assert_allclose(rates, coordinates ** 2 / 2, rtol=1e-8)

    def test_insufficient_samples(self):
        result = run(config(duration=0.2, cadence=10))
        assert result.dispersion == []
        with pytest.raises(InsufficientSamplesError):
            dispersion_extract(result)

    def test_no_closed_form_with_structured_potential(self):
        structured = config(potential={"kind": "gaussian_well", "depth": -0.05, "center": 0.0, "width": 3.0})
        assert expected_dispersion(structured, np.array([0.1])) is None
        shifted = config(solver="m_with_mass", potential={"kind": "constant", "value": 0.1})
        assert expected_dispersion(shifted, np.array([0.0]))[0] == pytest.approx(1.1)


class TestCompare:
    def setup_method(self):
        logging.disable(logging.CRITICAL)

    def teardown_method(self):
        logging.disable(logging.NOTSET)

    def test_identical_runs(self):
        report = compare(config(), config())
        np.testing.assert_array_equal(report.errors, 0.0)
        assert report.field == "phi"
        assert report.final_ratio == 0.0

    def test_pair_matches_kg(self):
        report = compare(config(solver="pair_m"), config())
        assert report.final_ratio < 1e-10

    def test_forward_field_for_schrodinger(self):
        report = compare(config(solver="schrodinger"), config(), Alignment.REMOVE_REST_MASS)
        assert report.field == "phi_plus"
        assert 0 < report.final_error < 1e-2

    def test_requirements(self):
        with pytest.raises(GridMismatchError):
            compare(config(), config(grid={"n": 256, "length": 64.0}))
        with pytest.raises(ConfigurationError):
            compare(config(), config(packet={"width": 2.0, "carrier": 0.2}))
        with pytest.raises(ConfigurationError):
            compare(config(), config(step=0.005, cadence=10))


class TestScans:
    def setup_method(self):
        logging.disable(logging.CRITICAL)

    def teardown_method(self):
        logging.disable(logging.NOTSET)

    def test_fit_exponent(self):
        assert fit_exponent([1, 2, 4], [3, 12, 48]) == pytest.approx(2.0)
        assert math.isnan(fit_exponent([1, 2, 4], [0, 1, 2]))

    def test_degenerate_scans(self):
        with pytest.raises(DegenerateScanError):
            convergence_scan(config(), config(), "k0", [0.1, 0.2])
        with pytest.raises(DegenerateScanError):
            convergence_scan(config(), config(), "k0", [0.1, 0.1, 0.2])

    def test_identical_legs_scan_to_zero(self):
        table = convergence_scan(config(), config(solver="pair_m"), "k0", [0.1, 0.2, 0.3])
        assert table.values == [0.1, 0.2, 0.3]
        assert max(table.results) < 1e-10
        assert table.parameter == "k0"

    def test_resonance_requirements(self):
        with pytest.raises(ConfigurationError):
            resonance_scan(config(), [2.0])
        with pytest.raises(ConfigurationError):
            resonance_scan(config(solver="pair_m"), [2.0])

    def test_zero_amplitude_drive(self):
        base = config(solver="pair_m", xi={"kind": "standing_wave", "amplitude": 0.0, "wavenumber": 0.0,
                                           "omega": 2.0})
        table = resonance_scan(base, [1.0, 2.0])
        assert max(abs(g) for g in table.results) < 1e-12


class TestOutput:
    def setup_method(self):
        logging.disable(logging.CRITICAL)

    def teardown_method(self):
        logging.disable(logging.NOTSET)

    def test_write_run(self, tmp_path):
        result = run(modes_config())
        writer = ResultWriter.create(str(tmp_path))
        write_run(writer, result)
        series = read_series(str(tmp_path / "series.csv"))
        np.testing.assert_array_equal(series.series["norm_phi"], result.series["norm_phi"])
        header, rows = read_table(str(tmp_path / "dispersion.csv"))
        assert header == ["k", "rate", "expected"]
        assert len(rows) == 8
        assert (tmp_path / "snapshots" / "phi_000200.csv").exists()
