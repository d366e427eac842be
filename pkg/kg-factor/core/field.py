from dataclasses import dataclass
from numbers import Number
from typing import Optional, Tuple, Union

import numpy as np

from .errors import GridMismatchError, NonFiniteFieldError
from .grid import Grid

Operand = Union["ComplexField", np.ndarray, Number]


@dataclass(frozen=True, eq=False)
class ComplexField:
    """
    Complex samples on a primary grid, optionally times one transverse grid.

    Values are copied to a read-only complex128 array of shape (n,) or
    (n, n_T). Fields are values: arithmetic returns new fields.
    """
    grid: Grid
    values: np.ndarray
    transverse: Optional[Grid] = None

    # ndarray op field defers to the reflected field operators
    __array_ufunc__ = None

    def __post_init__(self):
        values = np.array(self.values, dtype=np.complex128)
        if values.shape != self.shape:
            raise GridMismatchError(f"Field of shape {values.shape} does not match grid shape {self.shape}")
        if not np.all(np.isfinite(values)):
            raise NonFiniteFieldError("Field contains non-finite samples")
        values.setflags(write=False)
        object.__setattr__(self, "values", values)

    @classmethod
    def zeros(cls, grid: Grid, transverse: Optional[Grid] = None) -> 'ComplexField':
        shape = (grid.n,) if transverse is None else (grid.n, transverse.n)
        return cls(grid, np.zeros(shape, dtype=np.complex128), transverse)

    @property
    def shape(self) -> Tuple[int, ...]:
        if self.transverse is None:
            return (self.grid.n,)
        return (self.grid.n, self.transverse.n)

    @property
    def cell_volume(self) -> float:
        volume = self.grid.spacing
        if self.transverse is not None:
            volume *= self.transverse.spacing
        return volume

    def same_grid(self, other: 'ComplexField') -> bool:
        return self.grid == other.grid and self.transverse == other.transverse

    def require_same_grid(self, other: 'ComplexField') -> None:
        if not self.same_grid(other):
            raise GridMismatchError(f"Fields live on different grids: {self.grid} vs {other.grid}")

    def with_values(self, values: np.ndarray) -> 'ComplexField':
        return ComplexField(self.grid, values, self.transverse)

    def along_primary(self, samples: np.ndarray) -> np.ndarray:
        """Shape samples over the primary axis so they broadcast against the values."""
        samples = np.asarray(samples)
        if self.transverse is None:
            return samples
        return samples[:, np.newaxis]

    def _operand(self, other: Operand):
        if isinstance(other, ComplexField):
            self.require_same_grid(other)
            return other.values
        return other

    def __add__(self, other: Operand) -> 'ComplexField':
        return self.with_values(self.values + self._operand(other))

    __radd__ = __add__

    def __sub__(self, other: Operand) -> 'ComplexField':
        return self.with_values(self.values - self._operand(other))

    def __rsub__(self, other: Operand) -> 'ComplexField':
        return self.with_values(self._operand(other) - self.values)

    def __mul__(self, other: Operand) -> 'ComplexField':
        return self.with_values(self.values * self._operand(other))

    __rmul__ = __mul__

    def __truediv__(self, other: Union[np.ndarray, Number]) -> 'ComplexField':
        return self.with_values(self.values / other)

    def __neg__(self) -> 'ComplexField':
        return self.with_values(-self.values)

    def conj(self) -> 'ComplexField':
        return self.with_values(np.conj(self.values))
