from dataclasses import asdict, dataclass
import math

from .errors import ConfigurationError


@dataclass(frozen=True)
class Constants:
    """Physical constants of a run. Natural units by default."""
    hbar: float = 1.0
    c: float = 1.0
    m: float = 1.0

    def __post_init__(self):
        for name in ("hbar", "c", "m"):
            value = getattr(self, name)
            if not math.isfinite(value):
                raise ConfigurationError(f"Constant {name} must be finite, got {value}")
        if self.hbar <= 0:
            raise ConfigurationError(f"hbar must be positive, got {self.hbar}")
        if self.c <= 0:
            raise ConfigurationError(f"c must be positive, got {self.c}")
        if self.m < 0:
            raise ConfigurationError(f"m must be non-negative, got {self.m}")

    @classmethod
    def create_from_dict(cls, d: dict) -> 'Constants':
        unknown = set(d) - {"hbar", "c", "m"}
        if unknown:
            raise ConfigurationError(f"Unknown constants: {sorted(unknown)}")
        return cls(**{key: float(value) for key, value in d.items()})

    def to_dict(self) -> dict:
        return asdict(self)

    @property
    def rest_energy(self) -> float:
        return self.m * self.c ** 2

    def require_mass(self, operation: str) -> None:
        if self.m <= 0:
            raise ConfigurationError(f"{operation} requires m > 0")
