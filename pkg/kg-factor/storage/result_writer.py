from typing import Dict, Iterable, List, Optional, Sequence
import csv
import json
import os
import posixpath

import numpy as np
import smart_open

from core import ComplexField
from utils import log

NUMBER_FORMAT = ".17g"
METADATA_FILE = "metadata.json"


def format_number(value) -> str:
    if isinstance(value, (int, np.integer)) and not isinstance(value, bool):
        return str(int(value))
    return format(float(value), NUMBER_FORMAT)


def is_remote(uri: str) -> bool:
    return "://" in uri


class ResultWriter:
    """
    Writes run artifacts under one output location: CSV series, field
    snapshots, tables and a metadata.json sidecar. Local paths and any URI
    smart_open understands are accepted.
    """
    @classmethod
    def create(cls, out_dir: str, transport_params: Optional[dict] = None) -> 'ResultWriter':
        if not is_remote(out_dir):
            os.makedirs(out_dir, exist_ok=True)
        return cls(out_dir, transport_params)

    def __init__(self, out_dir: str, transport_params: Optional[dict] = None):
        self.out_dir = out_dir
        self.transport_params = transport_params
        self.files: List[str] = []

    def _path(self, name: str) -> str:
        if is_remote(self.out_dir):
            return posixpath.join(self.out_dir, name)
        path = os.path.join(self.out_dir, name)
        os.makedirs(os.path.dirname(path), exist_ok=True)
        return path

    def _open(self, name: str):
        self.files.append(name)
        # newline="" lets the csv module own line endings on every platform
        return smart_open.open(self._path(name), "w", newline="", transport_params=self.transport_params)

    def write_table(self, name: str, header: Sequence[str], rows: Iterable[Sequence]) -> str:
        with self._open(name) as f:
            writer = csv.writer(f, lineterminator="\n")
            writer.writerow(header)
            count = 0
            for row in rows:
                writer.writerow([format_number(value) for value in row])
                count += 1
        log.debug(f"Wrote {count} rows to {name}")
        return name

    def write_series(self, name: str, step_indices: Sequence[int], coordinates: Sequence[float],
                     series: Dict[str, Sequence[float]], coordinate_name: str = "t") -> str:
        columns = list(series)
        header = ["step_index", coordinate_name] + columns
        rows = (
            [int(step), coordinate] + [series[column][i] for column in columns]
            for i, (step, coordinate) in enumerate(zip(step_indices, coordinates))
        )
        return self.write_table(name, header, rows)

    def write_snapshot(self, name: str, f: ComplexField) -> str:
        coordinates = f.grid.coordinates
        if f.transverse is None:
            header = ["grid_index", "coordinate", "re", "im"]
            rows = ([j, coordinates[j], f.values[j].real, f.values[j].imag] for j in range(f.grid.n))
            return self.write_table(name, header, rows)
        transverse = f.transverse.coordinates
        header = ["grid_index", "coordinate", "transverse_index", "transverse_coordinate", "re", "im"]
        rows = (
            [j, coordinates[j], i, transverse[i], f.values[j, i].real, f.values[j, i].imag]
            for j in range(f.grid.n) for i in range(f.transverse.n)
        )
        return self.write_table(name, header, rows)

    def write_metadata(self, metadata: dict) -> str:
        metadata = dict(metadata)
        metadata["files"] = sorted(self.files)
        with self._open(METADATA_FILE) as f:
            json.dump(metadata, f, indent=2, sort_keys=True, default=_json_default)
            f.write("\n")
        log.info(f"Wrote {len(self.files)} files to {self.out_dir}")
        return METADATA_FILE


def _json_default(value):
    if isinstance(value, np.ndarray):
        return value.tolist()
    if isinstance(value, np.generic):
        return value.item()
    raise TypeError(f"Cannot serialise {type(value).__name__}")
