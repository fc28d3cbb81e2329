"""
Scalar numba kernels of the model primitives.

These mirror :mod:`recyclopt.model._primitives` for use inside compiled
integration loops. Parameters are passed as a flat ``float64`` vector laid
out by :func:`pack`, domain checks are left to the callers.

"""

__all__ = ["pack", "PACKED_FIELDS", "P_MIN", "R_MAX"]

import numpy as np
import numba as nb

from ._params import ModelParams
from ._primitives import constant_c

PACKED_FIELDS = (
    "gamma",
    "delta",
    "sigma",
    "alpha",
    "a0",
    "a1",
    "a2",
    "c_v",
    "p0",
    "C_L",
    "c",
)

# indexes into the packed vector
GAMMA, DELTA, SIGMA, ALPHA, A0, A1, A2, C_V, P0, C_L, C = range(len(PACKED_FIELDS))

# smallest admissible price when the closed-form price vanishes at r = 1
P_MIN = 1e-9

# controls and profit are evaluated at states capped here, the default end of
# the solver grid; at r = 1 the closed-form price would sit on P_MIN
R_MAX = 1.0 - 1e-6


def pack(params: ModelParams) -> np.ndarray:
    """
    Flatten parameters into the vector consumed by the compiled kernels.

    The last entry is the profit constant ``c`` (``0`` when ``a1 <= 1``).

    """
    c = constant_c(params) if params.a1 > 1 else 0.0
    values = [getattr(params, name) for name in PACKED_FIELDS[:-1]] + [c]
    return np.asarray(values, dtype=np.float64)


@nb.njit(cache=True)
def F(x, theta):  # pragma: no cover
    if x >= 0.0:
        gamma = theta[GAMMA]
        return x ** (gamma / (gamma - 1.0))
    return 0.0


@nb.njit(cache=True)
def F_prime(x, theta):  # pragma: no cover
    if x >= 0.0:
        gamma = theta[GAMMA]
        return gamma / (gamma - 1.0) * x ** (1.0 / (gamma - 1.0))
    return 0.0


@nb.njit(cache=True)
def G(r, theta):  # pragma: no cover
    a1 = theta[A1]
    a2 = theta[A2]
    if a1 > 1.0:
        return theta[C] * (1.0 - r) ** (1.0 - a1) * r**a2
    p0 = theta[P0]
    return (p0 - theta[C_V] * (1.0 - r)) * theta[A0] * p0 ** (-a1) * r**a2


@nb.njit(cache=True)
def drift(u, r, theta):  # pragma: no cover
    gamma = theta[GAMMA]
    return gamma * u ** (1.0 / gamma) * (1.0 - r) - theta[DELTA] * r


@nb.njit(cache=True)
def profit(p, u, r, theta):  # pragma: no cover
    if r <= 0.0:
        return -u
    demand = theta[A0] * p ** (-theta[A1]) * r ** theta[A2]
    return (p - (1.0 - r) * theta[C_V]) * demand - u


@nb.njit(cache=True)
def optimal_price(r, theta):  # pragma: no cover
    a1 = theta[A1]
    if a1 <= 1.0:
        return theta[P0]
    p = a1 * theta[C_V] * (1.0 - r) / (a1 - 1.0)
    if p < P_MIN:
        return P_MIN
    return p


@nb.njit(cache=True)
def control_state(r):  # pragma: no cover
    """Clamp a state into ``[0, R_MAX]`` before evaluating controls and profit."""
    if r < 0.0:
        return 0.0
    if r > R_MAX:
        return R_MAX
    return r
