from .result_writer import METADATA_FILE, ResultWriter, format_number
from .result_reader import SeriesTable, SnapshotTable, read_metadata, read_series, read_snapshot, read_table

__all__ = [
    "METADATA_FILE",
    "ResultWriter",
    "format_number",
    "SeriesTable",
    "SnapshotTable",
    "read_metadata",
    "read_series",
    "read_snapshot",
    "read_table",
]
