from typing import Dict, List, Optional, Sequence
import math

import numpy as np

from config import SimConfig, Solver, with_value
from core import ConfigurationError, DegenerateScanError
from potentials import DynamicKind
from utils import log
from workers import ScanWorker
from .compare import compare
from .results import Alignment, ScanTable
from .runner import run

MINIMUM_SCAN_POINTS = 3
# short scan names for the config entries scanned most often; any dotted path also works
PARAMETER_PATHS: Dict[str, str] = {
    "k0": "packet.carrier",
    "m": "constants.m",
    "omega_xi": "xi.omega",
    "v0": "potential.value",
    "xi_amplitude": "xi.amplitude",
}
_RESONANT_KINDS = (DynamicKind.STANDING_WAVE, DynamicKind.TRAVELING_WAVE)


def parameter_path(parameter: str) -> str:
    return PARAMETER_PATHS.get(parameter, parameter)


def with_parameter(config: SimConfig, parameter: str, value: float) -> SimConfig:
    return SimConfig.create_from_dict(with_value(config.to_dict(), parameter_path(parameter), value))


def _require_scan_values(values: Sequence[float], minimum: int) -> List[float]:
    values = [float(v) for v in values]
    if len(values) < minimum:
        raise DegenerateScanError(f"Scan needs at least {minimum} points, got {len(values)}")
    if len(set(values)) != len(values):
        raise DegenerateScanError(f"Scan values must be distinct, got {values}")
    return values


def fit_exponent(values: Sequence[float], results: Sequence[float]) -> float:
    """Least-squares slope of log(result) against log(value); NaN when a log is undefined."""
    values, results = np.asarray(values, dtype=float), np.asarray(results, dtype=float)
    if np.any(values <= 0) or np.any(results <= 0) or not np.all(np.isfinite(results)):
        return math.nan
    return float(np.polyfit(np.log(values), np.log(results), 1)[0])


def _process(points: list, fn, worker: Optional[ScanWorker], label: str) -> list:
    if worker is None:
        return [fn(point) for point in points]
    return worker.process(fn, points, label=label)


def convergence_scan(config_a: SimConfig, config_b: SimConfig, parameter: str, values: Sequence[float],
                     alignment: Alignment = Alignment.NONE, worker: Optional[ScanWorker] = None) -> ScanTable:
    """
    Final compare error between two legs as one parameter varies, plus the
    fitted log-log exponent. The parameter is set on both legs.
    """
    values = _require_scan_values(values, MINIMUM_SCAN_POINTS)
    alignment = Alignment(alignment)
    points = [(with_parameter(config_a, parameter, v), with_parameter(config_b, parameter, v)) for v in values]

    def error_at(legs) -> float:
        return compare(legs[0], legs[1], alignment).final_error

    errors = _process(points, error_at, worker, "scan point")
    exponent = fit_exponent(values, errors)
    log.info(f"Scanned {parameter} over {values}: errors {errors}, exponent {exponent:.4g}")
    return ScanTable(parameter, "final_error", values, errors, exponent)


def backward_growth(config: SimConfig) -> float:
    norms = run(config).series["norm_minus"]
    return float(np.max(norms) - norms[0])


def resonance_scan(config: SimConfig, omega_values: Sequence[float],
                   worker: Optional[ScanWorker] = None) -> ScanTable:
    """
    Growth of the backward component max ||phi_minus|| - ||phi_minus(0)|| as
    the drive frequency of a periodic Xi varies. Phase matching puts the peak
    near 2 mc^2 / hbar.
    """
    if config.solver is not Solver.PAIR_M:
        raise ConfigurationError(f"Resonance scans run the pair_m solver, got {config.solver.value}")
    if config.xi.kind not in _RESONANT_KINDS:
        raise ConfigurationError(f"Resonance scans need a standing or traveling Xi, got {config.xi.kind.value}")
    values = _require_scan_values(omega_values, 1)
    points = [with_parameter(config, "omega_xi", omega) for omega in values]
    growth = _process(points, backward_growth, worker, "resonance point")
    table = ScanTable("omega_xi", "phi_minus_growth", values, growth)
    log.info(f"Resonance scan peaks at omega_xi={table.peak:.4g} "
             f"(phase matching at {2 * config.constants.rest_energy / config.constants.hbar:.4g})")
    return table
