import numpy as np
from scipy import fft

from .field import ComplexField
from .grid import Grid
from .errors import ConfigurationError

PRIMARY_AXIS = "primary"
TRANSVERSE_AXIS = "transverse"


def to_spectrum(values: np.ndarray, axis: int = 0) -> np.ndarray:
    return fft.fft(values, axis=axis)


def from_spectrum(spectrum: np.ndarray, axis: int = 0) -> np.ndarray:
    return fft.ifft(spectrum, axis=axis)


def derivative_symbol(grid: Grid, order: int) -> np.ndarray:
    """(i*nu)^order with the unpaired Nyquist bin zeroed for odd orders."""
    if order not in (1, 2):
        raise ConfigurationError(f"Spectral derivative order must be 1 or 2, got {order}")
    symbol = grid.derivative_symbol ** order
    if order % 2 == 1:
        symbol = symbol.copy()
        symbol[grid.nyquist_index] = 0.0
    return symbol


def apply_symbol(values: np.ndarray, symbol: np.ndarray, axis: int = 0) -> np.ndarray:
    shape = [1] * values.ndim
    shape[axis] = symbol.shape[0]
    return from_spectrum(symbol.reshape(shape) * to_spectrum(values, axis), axis)


def derivative_values(values: np.ndarray, grid: Grid, order: int, axis: int = 0) -> np.ndarray:
    return apply_symbol(values, derivative_symbol(grid, order), axis)


def spectral_derivative(f: ComplexField, order: int) -> ComplexField:
    """Derivative along the primary axis, periodic boundary semantics."""
    return f.with_values(derivative_values(f.values, f.grid, order))


def spectral_laplacian(f: ComplexField, axis: str = PRIMARY_AXIS) -> ComplexField:
    if axis == PRIMARY_AXIS:
        return f.with_values(derivative_values(f.values, f.grid, 2))
    if axis == TRANSVERSE_AXIS:
        if f.transverse is None:
            raise ConfigurationError("Field has no transverse axis")
        return f.with_values(derivative_values(f.values, f.transverse, 2, axis=1))
    raise ConfigurationError(f"Unknown axis {axis!r}")

