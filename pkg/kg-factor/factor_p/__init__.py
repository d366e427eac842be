from .state import PairStateP, PropagationMode
from .spectrum import (
    EVANESCENT_GUARD,
    EVANESCENT_TOLERANCE,
    EbarSpectrum,
    ebar,
    ebar_spectrum,
    masked_energy_fraction,
    reference_wavevector,
)
from .operators import SalpeterProfile, apply_W, salpeter_samples
from .march import (
    p_exact_free_march,
    p_forward_rhs,
    p_pair_rhs,
    p_stability_dz,
    p_step,
    validity_margin_p,
)

__all__ = [
    "PairStateP",
    "PropagationMode",
    "EVANESCENT_GUARD",
    "EVANESCENT_TOLERANCE",
    "EbarSpectrum",
    "ebar",
    "ebar_spectrum",
    "masked_energy_fraction",
    "reference_wavevector",
    "SalpeterProfile",
    "apply_W",
    "salpeter_samples",
    "p_exact_free_march",
    "p_forward_rhs",
    "p_pair_rhs",
    "p_stability_dz",
    "p_step",
    "validity_margin_p",
]
