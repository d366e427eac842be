import json

import numpy as np
import pytest

from core import ComplexField, Grid
from storage import ResultWriter, format_number, read_metadata, read_series, read_snapshot, read_table


class TestResultWriter:
    def setup_method(self):
        self.grid = Grid(8, 4.0)
        self.field = ComplexField(self.grid, np.arange(8) * (0.1 + 0.3j))

    def test_format_number(self):
        assert format_number(3) == "3"
        assert format_number(np.int64(7)) == "7"
        assert format_number(0.1) == "0.10000000000000001"
        assert float(format_number(1 / 3)) == 1 / 3

    def test_series(self, tmp_path):
        writer = ResultWriter.create(str(tmp_path / "out"))
        writer.write_series("series.csv", [0, 10, 20], [0.0, 0.1, 0.2],
                            {"norm_phi": [1.0, 1.0, 0.9999], "energy": [2.0, 2.0, 2.0]})
        text = (tmp_path / "out" / "series.csv").read_text()
        assert text.splitlines()[0] == "step_index,t,norm_phi,energy"
        assert text.splitlines()[1] == "0,0,1,2"
        table = read_series(str(tmp_path / "out" / "series.csv"))
        np.testing.assert_array_equal(table.step_indices, [0, 10, 20])
        assert table.coordinate_name == "t"
        np.testing.assert_array_equal(table.coordinates, [0.0, 0.1, 0.2])
        np.testing.assert_array_equal(table.series["norm_phi"], [1.0, 1.0, 0.9999])

    def test_snapshot_round_trip(self, tmp_path):
        writer = ResultWriter.create(str(tmp_path))
        writer.write_snapshot("snapshots/phi_000000.csv", self.field)
        header, rows = read_table(str(tmp_path / "snapshots" / "phi_000000.csv"))
        assert header == ["grid_index", "coordinate", "re", "im"]
        assert len(rows) == 8
        snapshot = read_snapshot(str(tmp_path / "snapshots" / "phi_000000.csv"))
        np.testing.assert_array_equal(snapshot.grid_indices, np.arange(8))
        np.testing.assert_array_equal(snapshot.coordinates, self.grid.coordinates)
        np.testing.assert_array_equal(snapshot.values, self.field.values)

    def test_transverse_snapshot_round_trip(self, tmp_path):
        transverse = Grid(8, 2.0)
        values = np.outer(np.arange(8), np.arange(8) + 1j)
        field = ComplexField(self.grid, values, transverse)
        writer = ResultWriter.create(str(tmp_path))
        writer.write_snapshot("phi.csv", field)
        snapshot = read_snapshot(str(tmp_path / "phi.csv"))
        np.testing.assert_array_equal(snapshot.values, values)
        np.testing.assert_array_equal(snapshot.coordinates, self.grid.coordinates)

    def test_metadata_lists_files(self, tmp_path):
        writer = ResultWriter.create(str(tmp_path))
        writer.write_table("scan.csv", ["k0", "final_error"], [[0.1, 1e-5], [0.2, 1.6e-4]])
        writer.write_metadata({"command": "scan", "values": np.array([0.1, 0.2])})
        metadata = read_metadata(str(tmp_path))
        assert metadata["files"] == ["scan.csv"]
        assert metadata["values"] == [0.1, 0.2]
        assert json.loads((tmp_path / "metadata.json").read_text()) == metadata

    def test_byte_identical_output(self, tmp_path):
        for name in ("a", "b"):
            writer = ResultWriter.create(str(tmp_path / name))
            writer.write_snapshot("phi.csv", self.field)
        assert (tmp_path / "a" / "phi.csv").read_bytes() == (tmp_path / "b" / "phi.csv").read_bytes()

    def test_rejects_foreign_tables(self, tmp_path):
        writer = ResultWriter.create(str(tmp_path))
        writer.write_table("other.csv", ["x", "y"], [[1, 2]])
        with pytest.raises(ValueError):
            read_series(str(tmp_path / "other.csv"))
        with pytest.raises(ValueError):
            read_snapshot(str(tmp_path / "other.csv"))
