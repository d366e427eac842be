from .errors import (
    KGFactorError,
    ConfigurationError,
    GridMismatchError,
    NonFiniteFieldError,
    DivergenceError,
    EvanescentContentError,
    EvanescentBinError,
    UndefinedRatioError,
    ValidityThresholdError,
    InsufficientSamplesError,
    DegenerateScanError,
)
from .constants import Constants
from .grid import AxisKind, Grid
from .field import ComplexField
from .spectral import (
    PRIMARY_AXIS,
    TRANSVERSE_AXIS,
    apply_symbol,
    derivative_values,
    from_spectrum,
    spectral_derivative,
    spectral_laplacian,
    to_spectrum,
)
from .norms import l2_error, l2_norm, l2_norm_spectral, support_radius
from .packets import (
    ModeSuperpositionSpec,
    Normalization,
    PacketSpec,
    WavepacketSpec,
    make_gaussian_packet,
    make_mode_superposition,
    make_packet,
    packet_from_dict,
)
from .dispersion import kg_dispersion_omega, schrodinger_dispersion_energy
from .integrators import all_finite, rk4_step

__all__ = [
    "KGFactorError",
    "ConfigurationError",
    "GridMismatchError",
    "NonFiniteFieldError",
    "DivergenceError",
    "EvanescentContentError",
    "EvanescentBinError",
    "UndefinedRatioError",
    "ValidityThresholdError",
    "InsufficientSamplesError",
    "DegenerateScanError",
    "Constants",
    "AxisKind",
    "Grid",
    "ComplexField",
    "PRIMARY_AXIS",
    "TRANSVERSE_AXIS",
    "apply_symbol",
    "derivative_values",
    "from_spectrum",
    "spectral_derivative",
    "spectral_laplacian",
    "to_spectrum",
    "l2_error",
    "l2_norm",
    "l2_norm_spectral",
    "support_radius",
    "ModeSuperpositionSpec",
    "Normalization",
    "PacketSpec",
    "WavepacketSpec",
    "make_gaussian_packet",
    "make_mode_superposition",
    "make_packet",
    "packet_from_dict",
    "kg_dispersion_omega",
    "schrodinger_dispersion_energy",
    "all_finite",
    "rk4_step",
]
