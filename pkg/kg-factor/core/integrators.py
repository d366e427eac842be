from typing import Callable, Tuple

import numpy as np

State = Tuple[np.ndarray, ...]
RightHandSide = Callable[[float, State], State]


def _shifted(state: State, slope: State, h: float) -> State:
    return tuple(y + h * dy for y, dy in zip(state, slope))


def rk4_step(rhs: RightHandSide, state: State, t: float, h: float) -> State:
    """Classical fourth-order Runge-Kutta step over a tuple of arrays."""
    k1 = rhs(t, state)
    k2 = rhs(t + h / 2, _shifted(state, k1, h / 2))
    k3 = rhs(t + h / 2, _shifted(state, k2, h / 2))
    k4 = rhs(t + h, _shifted(state, k3, h))
    return tuple(
        y + (h / 6) * (a + 2 * b + 2 * c + d)
        for y, a, b, c, d in zip(state, k1, k2, k3, k4)
    )


def all_finite(*arrays: np.ndarray) -> bool:
    return all(bool(np.all(np.isfinite(a))) for a in arrays)
