from .state import KGState
from .solver import kg_init_forward, kg_init_pure_plus, kg_rhs, kg_stability_dt, kg_step
from .diagnostics import kg_energy, light_cone_mass

__all__ = [
    "KGState",
    "kg_init_forward",
    "kg_init_pure_plus",
    "kg_rhs",
    "kg_stability_dt",
    "kg_step",
    "kg_energy",
    "light_cone_mass",
]
