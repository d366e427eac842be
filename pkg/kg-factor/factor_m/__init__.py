from .state import DEFAULT_VALIDITY_THRESHOLD, PairStateM, ValidityReport
from .pair import (
    kg_from_pair,
    pair_from_kg,
    pair_rhs_m,
    pair_step_m,
    remove_rest_mass_phase,
    validity_margin_m,
)
from .schrodinger import (
    BACKWARD,
    FORWARD,
    m_equation_with_mass_step,
    schrodinger_energy,
    schrodinger_step,
)

__all__ = [
    "DEFAULT_VALIDITY_THRESHOLD",
    "PairStateM",
    "ValidityReport",
    "kg_from_pair",
    "pair_from_kg",
    "pair_rhs_m",
    "pair_step_m",
    "remove_rest_mass_phase",
    "validity_margin_m",
    "BACKWARD",
    "FORWARD",
    "m_equation_with_mass_step",
    "schrodinger_energy",
    "schrodinger_step",
]
