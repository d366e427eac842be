import json
import logging
from pathlib import Path
from unittest.mock import patch

import pytest

from core import DivergenceError
from harness import cli
from storage import read_metadata, read_series, read_table

CONFIG_DIR = Path(__file__).resolve().parents[3] / "configs"

SMALL_RUN = {
    "solver": "kg",
    "grid": {"n": 128, "length": 64.0},
    "packet": {"center": 0.0, "width": 2.0, "carrier": 0.3},
    "duration": 0.5,
    "step": 0.01,
    "cadence": 10,
}


@pytest.fixture
def config_file(tmp_path):
    def write(**changes) -> str:
        d = dict(SMALL_RUN)
        d.update(changes)
        path = tmp_path / f"config_{len(list(tmp_path.glob('config_*.json')))}.json"
        path.write_text(json.dumps(d))
        return str(path)
    return write


class TestCli:
    def setup_method(self):
        logging.disable(logging.CRITICAL)
        self.shutdown_patch = patch("harness.cli.handle_shutdown")
        self.handle_shutdown = self.shutdown_patch.start()

    def teardown_method(self):
        self.shutdown_patch.stop()
        logging.disable(logging.NOTSET)

    def test_simulate(self, tmp_path, config_file):
        out = tmp_path / "out"
        assert cli.main(["simulate", "--config", config_file(), "--out", str(out)]) == cli.EXIT_OK
        self.handle_shutdown.assert_called_once()
        series = read_series(str(out / "series.csv"))
        assert list(series.step_indices) == [0, 10, 20, 30, 40, 50]
        assert (out / "snapshots" / "phi_000050.csv").exists()
        metadata = read_metadata(str(out))
        assert metadata["command"] == "simulate"
        assert metadata["config"]["solver"] == "kg"
        assert set(metadata["versions"]) >= {"numpy", "scipy", "python"}

    def test_simulate_is_byte_identical(self, tmp_path, config_file):
        path = config_file()
        first, second = tmp_path / "first", tmp_path / "second"
        assert cli.main(["simulate", "--config", path, "--out", str(first)]) == cli.EXIT_OK
        assert cli.main(["simulate", "--config", path, "--out", str(second)]) == cli.EXIT_OK
        csvs = sorted(p.relative_to(first) for p in first.rglob("*.csv"))
        assert csvs
        for name in csvs:
            assert (first / name).read_bytes() == (second / name).read_bytes()
        assert read_metadata(str(first))["config_hash"] == read_metadata(str(second))["config_hash"]

    def test_override(self, tmp_path, config_file):
        out = tmp_path / "out"
        code = cli.main(["simulate", "--config", config_file(), "--out", str(out), "--override", "cadence=25"])
        assert code == cli.EXIT_OK
        assert list(read_series(str(out / "series.csv")).step_indices) == [0, 25, 50]

    def test_dispersion(self, tmp_path):
        out = tmp_path / "out"
        code = cli.main(["dispersion", "--config", str(CONFIG_DIR / "dispersion_kg.json"), "--out", str(out)])
        assert code == cli.EXIT_OK
        header, rows = read_table(str(out / "dispersion.csv"))
        assert header == ["k", "rate", "expected"]
        assert len(rows) == 8
        assert not (out / "snapshots").exists()
        assert read_metadata(str(out))["modes"] == 8

    def test_compare(self, tmp_path, config_file):
        out = tmp_path / "out"
        code = cli.main(["compare", "--config", config_file(), "--out", str(out),
                         "--against-override", "solver=pair_m"])
        assert code == cli.EXIT_OK
        header, rows = read_table(str(out / "compare.csv"))
        assert header == ["step_index", "t", "error", "relative_error"]
        assert len(rows) == 6
        metadata = read_metadata(str(out))
        assert metadata["field"] == "phi"
        assert metadata["final_ratio"] < 1e-10

    def test_scan(self, tmp_path, config_file):
        out = tmp_path / "out"
        code = cli.main(["scan", "--config", config_file(), "--out", str(out), "--against-override", "solver=pair_m",
                         "--parameter", "k0", "--values", "0.1", "0.2", "0.3"])
        assert code == cli.EXIT_OK
        header, rows = read_table(str(out / "scan.csv"))
        assert header == ["k0", "final_error"]
        assert len(rows) == 3

    def test_resonance(self, tmp_path, config_file):
        out = tmp_path / "out"
        path = config_file(solver="pair_m", xi={"kind": "standing_wave", "amplitude": 0.01, "wavenumber": 0.0,
                                                "omega": 2.0})
        code = cli.main(["resonance", "--config", path, "--out", str(out), "--values", "1.0", "2.0"])
        assert code == cli.EXIT_OK
        header, rows = read_table(str(out / "resonance.csv"))
        assert header == ["omega_xi", "phi_minus_growth"]
        assert read_metadata(str(out))["peak"] in (1.0, 2.0)

    @pytest.mark.parametrize("argv_tail", [
        ["--override", "unknown_key=1"],
        ["--override", "cadence"],
        ["--override", "step=0.5"],
    ])
    def test_configuration_errors(self, tmp_path, config_file, argv_tail):
        argv = ["simulate", "--config", config_file(), "--out", str(tmp_path / "out")] + argv_tail
        assert cli.main(argv) == cli.EXIT_CONFIG

    def test_degenerate_scan(self, tmp_path, config_file):
        code = cli.main(["scan", "--config", config_file(), "--out", str(tmp_path / "out"),
                         "--parameter", "k0", "--values", "0.1", "0.2"])
        assert code == cli.EXIT_CONFIG

    def test_grid_mismatch(self, tmp_path, config_file):
        code = cli.main(["compare", "--config", config_file(), "--out", str(tmp_path / "out"),
                         "--against-override", "grid.n=256"])
        assert code == cli.EXIT_CONFIG

    def test_enforced_validity(self, tmp_path, config_file):
        code = cli.main(["simulate", "--config", config_file(solver="pair_m", validity_threshold=1e-6),
                         "--out", str(tmp_path / "out"), "--enforce-validity"])
        assert code == cli.EXIT_VALIDITY

    def test_divergence(self, tmp_path, config_file):
        with patch("harness.cli.run", side_effect=DivergenceError(7)):
            code = cli.main(["simulate", "--config", config_file(), "--out", str(tmp_path / "out")])
        assert code == cli.EXIT_DIVERGENCE

    @patch("harness.cli.sentry_sdk")
    @patch("harness.cli.init_sentry", return_value=True)
    def test_unexpected_error_is_reported(self, _init_sentry, sentry_sdk, tmp_path, config_file):
        error = RuntimeError("boom")
        with patch("harness.cli.run", side_effect=error):
            code = cli.main(["simulate", "--config", config_file(), "--out", str(tmp_path / "out")])
        assert code == cli.EXIT_FAILURE
        sentry_sdk.capture_exception.assert_called_once_with(error)

    def test_interrupt(self, tmp_path, config_file):
        with patch("harness.cli.run", side_effect=KeyboardInterrupt):
            code = cli.main(["simulate", "--config", config_file(), "--out", str(tmp_path / "out")])
        assert code == cli.EXIT_INTERRUPTED

    def test_exit_code_for(self):
        assert cli.exit_code_for(DivergenceError(1)) == cli.EXIT_DIVERGENCE
        assert cli.exit_code_for(cli.KGFactorError("other")) == cli.EXIT_FAILURE
