from .results import Alignment, ErrorReport, ScanTable, SimResult
from .steppers import Stepper, create_stepper
from .dispersion import MINIMUM_DISPERSION_SAMPLES, dispersion_extract, expected_dispersion
from .runner import SimulationRunner, run
from .compare import compare, compare_results
from .scans import PARAMETER_PATHS, convergence_scan, fit_exponent, resonance_scan

__all__ = [
    "Alignment",
    "ErrorReport",
    "ScanTable",
    "SimResult",
    "Stepper",
    "create_stepper",
    "MINIMUM_DISPERSION_SAMPLES",
    "dispersion_extract",
    "expected_dispersion",
    "SimulationRunner",
    "run",
    "compare",
    "compare_results",
    "PARAMETER_PATHS",
    "convergence_scan",
    "fit_exponent",
    "resonance_scan",
]
