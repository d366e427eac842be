from dataclasses import dataclass
from typing import Dict, List, Tuple
import csv
import json

import numpy as np
import smart_open

from .result_writer import METADATA_FILE


@dataclass
class SeriesTable:
    step_indices: np.ndarray
    coordinate_name: str
    coordinates: np.ndarray
    series: Dict[str, np.ndarray]


@dataclass
class SnapshotTable:
    grid_indices: np.ndarray
    coordinates: np.ndarray
    values: np.ndarray


def read_table(path: str) -> Tuple[List[str], List[List[str]]]:
    with smart_open.open(path, "r", newline="") as f:
        reader = csv.reader(f)
        header = next(reader)
        rows = [row for row in reader]
    return header, rows


def read_series(path: str) -> SeriesTable:
    header, rows = read_table(path)
    if header[0] != "step_index" or len(header) < 2:
        raise ValueError(f"{path} is not a series table: {header}")
    columns = list(zip(*rows)) if rows else [()] * len(header)
    return SeriesTable(
        np.array(columns[0], dtype=int),
        header[1],
        np.array(columns[1], dtype=float),
        {name: np.array(column, dtype=float) for name, column in zip(header[2:], columns[2:])},
    )


def read_snapshot(path: str) -> SnapshotTable:
    """Reads 1-D snapshots into (n,) values and 2-D ones into (n, n_T)."""
    header, rows = read_table(path)
    data = np.array(rows, dtype=float)
    values = data[:, -2] + 1j * data[:, -1]
    if header == ["grid_index", "coordinate", "re", "im"]:
        return SnapshotTable(data[:, 0].astype(int), data[:, 1], values)
    if header == ["grid_index", "coordinate", "transverse_index", "transverse_coordinate", "re", "im"]:
        n = int(data[:, 0].max()) + 1
        n_transverse = int(data[:, 2].max()) + 1
        primary = data[::n_transverse, :2]
        return SnapshotTable(primary[:, 0].astype(int), primary[:, 1], values.reshape(n, n_transverse))
    raise ValueError(f"{path} is not a snapshot table: {header}")


def read_metadata(out_dir: str) -> dict:
    separator = "" if out_dir.endswith("/") else "/"
    with smart_open.open(f"{out_dir}{separator}{METADATA_FILE}", "r") as f:
        return json.load(f)
