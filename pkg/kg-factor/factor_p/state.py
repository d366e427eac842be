from dataclasses import dataclass
from enum import Enum

from core import ComplexField, ConfigurationError


class PropagationMode(str, Enum):
    LITERAL = "literal"
    EXACT_OMEGA = "exact-omega"

    @classmethod
    def parse(cls, value) -> 'PropagationMode':
        if value == "exact-ω":
            return cls.EXACT_OMEGA
        try:
            return cls(value)
        except ValueError as e:
            raise ConfigurationError(f"Unknown propagation mode {value!r}") from e


@dataclass(frozen=True)
class PairStateP:
    """Fields over time (optionally times a transverse axis) at march position z."""
    phi_plus: ComplexField
    phi_minus: ComplexField
    z: float = 0.0

    def __post_init__(self):
        self.phi_plus.require_same_grid(self.phi_minus)

    @property
    def phi(self) -> ComplexField:
        return self.phi_plus + self.phi_minus
