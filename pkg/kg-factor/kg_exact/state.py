from dataclasses import dataclass

from core import ComplexField


@dataclass(frozen=True)
class KGState:
    """Klein-Gordon state reduced to first order in time: chi = (i hbar d/dt - V) phi."""
    phi: ComplexField
    chi: ComplexField
    t: float = 0.0

    def __post_init__(self):
        self.phi.require_same_grid(self.chi)
