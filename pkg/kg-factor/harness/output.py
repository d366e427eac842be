from importlib import metadata as importlib_metadata
from typing import Dict, Optional
import platform

import numpy as np
import scipy

from core import AxisKind
from storage import ResultWriter
from utils import get_dict_hash
from .dispersion import expected_dispersion
from .results import ErrorReport, ScanTable, SimResult

PACKAGE_NAME = "kg-factor"
SERIES_FILE = "series.csv"
DISPERSION_FILE = "dispersion.csv"
COMPARE_FILE = "compare.csv"
SCAN_FILE = "scan.csv"
RESONANCE_FILE = "resonance.csv"


def package_version() -> str:
    try:
        return importlib_metadata.version(PACKAGE_NAME)
    except importlib_metadata.PackageNotFoundError:
        return "unknown"


def versions() -> Dict[str, str]:
    return {
        PACKAGE_NAME: package_version(),
        "numpy": np.__version__,
        "scipy": scipy.__version__,
        "python": platform.python_version(),
    }


def build_metadata(command: str, config_echo: dict, wall_time: float, extra: Optional[dict] = None) -> dict:
    d = {
        "command": command,
        "config": config_echo,
        "config_hash": get_dict_hash(config_echo),
        "versions": versions(),
        "wall_time": wall_time,
    }
    d.update(extra or {})
    return d


def snapshot_name(field: str, step_index: int) -> str:
    return f"snapshots/{field}_{step_index:06d}.csv"


def write_run(writer: ResultWriter, result: SimResult, snapshots: bool = True) -> None:
    writer.write_series(SERIES_FILE, result.step_indices, result.coordinates, result.series,
                        result.coordinate_name)
    if snapshots:
        for name, fields in sorted(result.snapshots.items()):
            for step_index, f in zip(result.step_indices, fields):
                writer.write_snapshot(snapshot_name(name, step_index), f)
    if result.dispersion:
        write_dispersion(writer, result)


def write_dispersion(writer: ResultWriter, result: SimResult) -> None:
    conjugate = "omega" if result.config.grid.axis_kind is AxisKind.TIME else "k"
    coordinates = np.array([point[0] for point in result.dispersion])
    rates = [point[1] for point in result.dispersion]
    expected = expected_dispersion(result.config, coordinates)
    if expected is None:
        writer.write_table(DISPERSION_FILE, [conjugate, "rate"], zip(coordinates, rates))
    else:
        writer.write_table(DISPERSION_FILE, [conjugate, "rate", "expected"], zip(coordinates, rates, expected))


def write_error_report(writer: ResultWriter, report: ErrorReport, coordinate_name: str = "t") -> None:
    writer.write_series(COMPARE_FILE, report.step_indices, report.coordinates,
                        {"error": report.errors, "relative_error": report.relative_errors}, coordinate_name)


def write_scan(writer: ResultWriter, table: ScanTable, name: str = SCAN_FILE) -> None:
    writer.write_table(name, [table.parameter, table.metric], table.rows)
