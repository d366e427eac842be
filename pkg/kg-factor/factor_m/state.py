from dataclasses import dataclass

from core import ComplexField

DEFAULT_VALIDITY_THRESHOLD = 0.1


@dataclass(frozen=True)
class PairStateM:
    """Forward/backward split of a spatial field, phi = phi_plus + phi_minus."""
    phi_plus: ComplexField
    phi_minus: ComplexField
    t: float = 0.0

    def __post_init__(self):
        self.phi_plus.require_same_grid(self.phi_minus)

    @property
    def phi(self) -> ComplexField:
        return self.phi_plus + self.phi_minus


@dataclass(frozen=True)
class ValidityReport:
    """Cross-coupling drive over kept terms, for the worse of the two components."""
    ratio: float
    threshold: float = DEFAULT_VALIDITY_THRESHOLD

    @property
    def ok(self) -> bool:
        return self.ratio < self.threshold
