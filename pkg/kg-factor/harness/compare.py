from typing import List, Optional

import numpy as np

from config import SimConfig, Solver
from core import ComplexField, ConfigurationError, GridMismatchError, l2_error, l2_norm
from factor_m import PairStateM, remove_rest_mass_phase
from potentials import eval_static
from utils import log
from workers import ScanWorker
from .results import Alignment, ErrorReport, SimResult
from .runner import run

# solvers whose natural output is the forward component rather than the full phi
_FORWARD_SOLVERS = (Solver.SCHRODINGER, Solver.M_WITH_MASS, Solver.FORWARD_P)
# solvers whose fields already have the rest-mass phase removed
_PHASE_REMOVED = (Solver.SCHRODINGER,)
COORDINATE_TOLERANCE = 1e-9


def comparison_field(config_a: SimConfig, config_b: SimConfig) -> str:
    if config_a.solver in _FORWARD_SOLVERS or config_b.solver in _FORWARD_SOLVERS:
        return "phi_plus"
    return "phi"


def require_comparable(config_a: SimConfig, config_b: SimConfig, alignment: Alignment) -> None:
    if config_a.grid != config_b.grid or config_a.transverse != config_b.transverse:
        raise GridMismatchError(f"Compared runs use different grids: {config_a.grid} vs {config_b.grid}")
    if config_a.packet != config_b.packet:
        raise ConfigurationError("Compared runs must start from the same initial packet")
    if alignment is not Alignment.NONE and (config_a.solver.is_p or config_b.solver.is_p):
        raise ConfigurationError(f"Alignment {alignment.value!r} only applies to t-marched solvers")


def _aligned(f: ComplexField, t: float, config: SimConfig, alignment: Alignment) -> ComplexField:
    if alignment is Alignment.NONE:
        return f
    if config.solver not in _PHASE_REMOVED:
        f = remove_rest_mass_phase(PairStateM(f, ComplexField.zeros(f.grid), t), config.constants).phi_plus
    if alignment is Alignment.REMOVE_REST_MASS_AND_V:
        v_mean = float(np.mean(eval_static(config.potential, f.grid)))
        f = f * np.exp(1j * v_mean * t / config.constants.hbar)
    return f


def compare_results(result_a: SimResult, result_b: SimResult,
                    alignment: Alignment = Alignment.NONE) -> ErrorReport:
    """
    Per-sample L2 distance between the aligned fields of two finished runs.
    Relative errors are taken against leg b; both fields zero counts as zero.
    """
    alignment = Alignment(alignment)
    config_a, config_b = result_a.config, result_b.config
    require_comparable(config_a, config_b, alignment)
    coordinates = result_a.coordinates
    if (len(coordinates) != len(result_b.coordinates)
            or not np.allclose(coordinates, result_b.coordinates, rtol=0, atol=COORDINATE_TOLERANCE)):
        raise ConfigurationError("Compared runs must be sampled at the same t (or z) values")

    name = comparison_field(config_a, config_b)
    try:
        fields_a, fields_b = result_a.snapshots[name], result_b.snapshots[name]
    except KeyError as e:
        raise ConfigurationError(f"Field {name} is not recorded by both runs") from e

    errors, relative = [], []
    for f, g, t in zip(fields_a, fields_b, coordinates):
        f, g = _aligned(f, t, config_a, alignment), _aligned(g, t, config_b, alignment)
        error = l2_error(f, g)
        reference = l2_norm(g)
        errors.append(error)
        if reference > 0:
            relative.append(error / reference)
        else:
            relative.append(0.0 if error == 0 else float("inf"))
    report = ErrorReport(name, alignment, list(result_a.step_indices), np.asarray(coordinates),
                         np.array(errors), np.array(relative))
    log.info(f"Compared {config_a.solver.value} against {config_b.solver.value} on {name}: "
             f"final error {report.final_error:.3e} (relative {report.final_ratio:.3e})")
    return report


def run_legs(configs: List[SimConfig], worker: Optional[ScanWorker] = None) -> List[SimResult]:
    if worker is None:
        return [run(config) for config in configs]
    return worker.process(run, configs, label="compare leg")


def compare(config_a: SimConfig, config_b: SimConfig, alignment: Alignment = Alignment.NONE,
            worker: Optional[ScanWorker] = None) -> ErrorReport:
    alignment = Alignment(alignment)
    require_comparable(config_a, config_b, alignment)
    result_a, result_b = run_legs([config_a, config_b], worker)
    return compare_results(result_a, result_b, alignment)
