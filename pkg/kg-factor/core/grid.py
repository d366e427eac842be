from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from typing import Optional
import math

import numpy as np
from scipy import fft

from .errors import ConfigurationError

MINIMUM_SAMPLES = 8


class AxisKind(str, Enum):
    SPACE = "space"
    TIME = "time"


@dataclass(frozen=True)
class Grid:
    """
    Uniform periodic grid along one axis.

    Space axes carry modes e^{+ikx}, time axes carry modes e^{-iwt}, so the
    conjugate axis is k = 2*pi*fftfreq on space grids and w = -2*pi*fftfreq on
    time grids. The derivative symbol is the same on both: i*2*pi*fftfreq.
    """
    n: int
    length: float
    axis_kind: AxisKind = AxisKind.SPACE
    origin: Optional[float] = None

    def __post_init__(self):
        if isinstance(self.n, bool) or int(self.n) != self.n:
            raise ConfigurationError(f"Grid size must be an integer, got {self.n}")
        n = int(self.n)
        if n < MINIMUM_SAMPLES or n & (n - 1) != 0:
            raise ConfigurationError(f"Grid size must be a power of two >= {MINIMUM_SAMPLES}, got {n}")
        if not math.isfinite(self.length) or self.length <= 0:
            raise ConfigurationError(f"Grid length must be positive, got {self.length}")
        try:
            axis_kind = AxisKind(self.axis_kind)
        except ValueError as e:
            raise ConfigurationError(f"Unknown axis kind {self.axis_kind!r}") from e
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "length", float(self.length))
        object.__setattr__(self, "axis_kind", axis_kind)
        origin = -self.length / 2 if self.origin is None else float(self.origin)
        object.__setattr__(self, "origin", origin)

    @property
    def spacing(self) -> float:
        return self.length / self.n

    @cached_property
    def coordinates(self) -> np.ndarray:
        coords = self.origin + self.spacing * np.arange(self.n)
        coords.setflags(write=False)
        return coords

    @cached_property
    def angular_frequencies(self) -> np.ndarray:
        """2*pi*j/L over the signed DFT index set, in scipy.fft order."""
        nu = 2 * np.pi * fft.fftfreq(self.n, d=self.spacing)
        nu.setflags(write=False)
        return nu

    @cached_property
    def conjugate_axis(self) -> np.ndarray:
        if self.axis_kind is AxisKind.SPACE:
            return self.angular_frequencies
        omega = -self.angular_frequencies
        omega.setflags(write=False)
        return omega

    @property
    def derivative_symbol(self) -> np.ndarray:
        return 1j * self.angular_frequencies

    @property
    def nyquist(self) -> float:
        return np.pi / self.spacing

    @property
    def nyquist_index(self) -> int:
        return self.n // 2

    def periodic_distance(self, x0: float) -> np.ndarray:
        """Minimum-image distance from every sample to x0."""
        d = np.abs(self.coordinates - x0) % self.length
        return np.minimum(d, self.length - d)
