from typing import Optional, Union

import numpy as np

from core import ComplexField, Constants, Grid, derivative_values
from potentials import DynamicPotential, StaticPotential, eval_dynamic, eval_static_at

# V along the march may be static in z or depend on both z and t
SalpeterProfile = Union[StaticPotential, DynamicPotential]


def salpeter_samples(V: SalpeterProfile, grid: Grid, z: float) -> np.ndarray:
    """V(z, t_j) over the time grid at march position z."""
    if isinstance(V, DynamicPotential):
        return eval_dynamic(V, grid, z)
    return np.full(grid.n, float(eval_static_at(V, np.array([z]))[0]))


def salpeter_bound(V: SalpeterProfile, positions: np.ndarray) -> float:
    if isinstance(V, DynamicPotential):
        return V.bound
    if V.is_zero:
        return 0.0
    return float(np.max(np.abs(eval_static_at(V, positions))))


def _broadcast(samples: np.ndarray, values: np.ndarray) -> np.ndarray:
    return samples[:, np.newaxis] if values.ndim == 2 else samples


def w_values(values: np.ndarray, v: np.ndarray, xi: np.ndarray, grid: Grid, transverse: Optional[Grid],
             consts: Constants) -> np.ndarray:
    hbar, c = consts.hbar, consts.c
    v = _broadcast(v, values)
    xi = _broadcast(xi, values)

    def energy(g):
        return 1j * hbar * derivative_values(g, grid, 1)

    result = np.zeros_like(values)
    if transverse is not None:
        result = result + (hbar * c) ** 2 * derivative_values(values, transverse, 2, axis=1)
    result = result + v ** 2 * values
    result = result - energy(v * values)
    result = result - v * energy(values)
    return result - 2 * consts.rest_energy ** 2 * xi * values


def apply_W(f: ComplexField, V: SalpeterProfile, Xi: DynamicPotential, consts: Constants, z: float) -> ComplexField:
    """
    W f = -c^2 p_T^2 f + V^2 f - E(V f) - V(E f) - 2 m^2 c^4 Xi f, with E = i hbar d/dt
    and p_T = -i hbar d/dy along the transverse axis when the field has one.
    """
    grid = f.grid
    v = salpeter_samples(V, grid, z)
    xi = eval_dynamic(Xi, grid, z)
    return f.with_values(w_values(f.values, v, xi, grid, f.transverse, consts))
