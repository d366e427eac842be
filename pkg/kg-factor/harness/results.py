from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, List, Optional, Tuple

import numpy as np

from config import SimConfig
from core import ComplexField


class Alignment(str, Enum):
    NONE = "none"
    REMOVE_REST_MASS = "remove_rest_mass"
    REMOVE_REST_MASS_AND_V = "remove_rest_mass_and_V"


@dataclass
class SimResult:
    """Everything recorded by one run, sampled at the configured cadence."""
    config: SimConfig
    step_indices: List[int]
    coordinates: np.ndarray
    series: Dict[str, np.ndarray]
    snapshots: Dict[str, List[ComplexField]]
    dispersion: List[Tuple[float, float]] = field(default_factory=list)
    wall_time: float = 0.0

    @property
    def coordinate_name(self) -> str:
        return "z" if self.config.solver.is_p else "t"


@dataclass
class ErrorReport:
    field: str
    alignment: Alignment
    step_indices: List[int]
    coordinates: np.ndarray
    errors: np.ndarray
    relative_errors: np.ndarray

    @property
    def final_error(self) -> float:
        return float(self.errors[-1])

    @property
    def final_ratio(self) -> float:
        return float(self.relative_errors[-1])


@dataclass
class ScanTable:
    parameter: str
    metric: str
    values: List[float]
    results: List[float]
    exponent: Optional[float] = None

    @property
    def rows(self) -> List[Tuple[float, float]]:
        return list(zip(self.values, self.results))

    @property
    def peak(self) -> float:
        """Scan value with the largest result."""
        return self.values[int(np.argmax(self.results))]
