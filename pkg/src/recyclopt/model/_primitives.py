"""Primitive model functions: drift, demand, profit and the HJB extensions."""

__all__ = [
    "drift_R",
    "demand",
    "profit",
    "F",
    "F_prime",
    "G",
    "G_prime",
    "constant_c",
]


import numpy as np

from numpy.typing import ArrayLike

from ._params import ModelParams


def drift_R(u: ArrayLike, r: ArrayLike, params: ModelParams) -> np.ndarray:
    """
    Recycling-rate drift ``R(u, r) = gamma * u**(1/gamma) * (1 - r) - delta * r``.

    Parameters
    ----------
    u : ArrayLike
        Recycling investment rate. Must be ``>= 0``.
    r : ArrayLike
        Recycling rate in ``[0, 1]``.
    params : ModelParams
        Model parameters.

    Returns
    -------
    np.ndarray
        Drift value(s).

    """
    u = np.asarray(u, dtype=float)
    r = _check_rate(r)
    if np.any(u < 0):
        raise ValueError(f"investment u must be non-negative, got {u}")
    gamma = params.gamma
    return (gamma * u ** (1.0 / gamma) * (1.0 - r) - params.delta * r)[()]


def demand(p: ArrayLike, r: ArrayLike, params: ModelParams) -> np.ndarray:
    """
    Cobb-Douglas demand ``D(p, r) = a0 * p**(-a1) * r**a2``.

    Parameters
    ----------
    p : ArrayLike
        Retail price. Must be ``> 0``.
    r : ArrayLike
        Recycling rate in ``[0, 1]``.
    params : ModelParams
        Model parameters.

    Returns
    -------
    np.ndarray
        Demand value(s), zero iff ``r == 0``.

    """
    p = _check_price(p)
    r = _check_rate(r)
    return (params.a0 * p ** (-params.a1) * r**params.a2)[()]


def profit(p: ArrayLike, u: ArrayLike, r: ArrayLike, params: ModelParams) -> np.ndarray:
    """
    Instantaneous profit ``pi = [p - (1 - r) c_v] D(p, r) - u``.

    Revenue from sales minus production cost of the virgin share and
    recycling investment.

    """
    u = np.asarray(u, dtype=float)
    if np.any(u < 0):
        raise ValueError(f"investment u must be non-negative, got {u}")
    r = _check_rate(r)
    margin = np.asarray(p, dtype=float) - (1.0 - r) * params.c_v
    return (margin * demand(p, r, params) - u)[()]


def F(x: ArrayLike, params: ModelParams) -> np.ndarray:
    """
    Positive-part power ``F(x) = x**(gamma/(gamma-1))`` for ``x >= 0``, else ``0``.

    """
    x = np.asarray(x, dtype=float)
    exponent = params.gamma / (params.gamma - 1.0)
    return np.where(x >= 0, np.maximum(x, 0.0) ** exponent, 0.0)[()]


def F_prime(x: ArrayLike, params: ModelParams) -> np.ndarray:
    """
    Derivative of :func:`F`, ``gamma/(gamma-1) * x**(1/(gamma-1))`` for ``x >= 0``.

    """
    x = np.asarray(x, dtype=float)
    gamma = params.gamma
    coeff = gamma / (gamma - 1.0)
    return np.where(x >= 0, coeff * np.maximum(x, 0.0) ** (1.0 / (gamma - 1.0)), 0.0)[
        ()
    ]


def constant_c(params: ModelParams) -> float:
    """
    Profit constant of the ``a1 > 1`` regime.

    ``c = a0 c_v**(1-a1) [(a1/(a1-1))**(1-a1) - (a1/(a1-1))**(-a1)]``,
    i.e., the maximized price term is ``c (1 - r)**(1-a1) r**a2``.

    Raises
    ------
    ValueError
        If ``a1 <= 1`` (constant undefined).

    """
    a1 = params.a1
    if a1 <= 1:
        raise ValueError(f"constant c requires a1 > 1, got a1={a1}")
    ratio = a1 / (a1 - 1.0)
    return float(
        params.a0 * params.c_v ** (1.0 - a1) * (ratio ** (1.0 - a1) - ratio ** (-a1))
    )


def G(r: ArrayLike, params: ModelParams) -> np.ndarray:
    """
    Maximized price term of the HJB, in both price-sensitivity regimes.

    For ``a1 > 1``: ``c (1 - r)**(1-a1) r**a2`` (singular at ``r = 1``).
    For ``a1 <= 1``: ``[p0 - c_v (1 - r)] a0 p0**(-a1) r**a2``.

    Raises
    ------
    ValueError
        If ``r`` lies outside ``[0, 1]``, or ``r == 1`` with ``a1 > 1``.

    """
    r = _check_rate(r)
    a0, a1, a2 = params.a0, params.a1, params.a2
    if a1 > 1:
        _check_singular_endpoint(r)
        return (constant_c(params) * (1.0 - r) ** (1.0 - a1) * r**a2)[()]
    return ((params.p0 - params.c_v * (1.0 - r)) * a0 * params.p0 ** (-a1) * r**a2)[
        ()
    ]


def G_prime(r: ArrayLike, params: ModelParams) -> np.ndarray:
    """
    Derivative of :func:`G` with respect to ``r``.

    For ``a1 > 1``: ``c (1 - r)**(-a1) r**a2 [(a1 - 1) + (1 - r) a2 / r]``.
    For ``a1 <= 1``: ``a0 p0**(-a1) r**a2 [c_v + a2 (p0 - c_v (1 - r)) / r]``.

    The ``r**a2 / r`` factors are evaluated as ``r**(a2 - 1)``, so ``r = 0``
    is finite whenever ``a2 >= 1``.

    """
    r = _check_rate(r)
    a0, a1, a2 = params.a0, params.a1, params.a2
    with np.errstate(divide="ignore"):
        if a1 > 1:
            _check_singular_endpoint(r)
            c = constant_c(params)
            out = (
                c
                * (1.0 - r) ** (-a1)
                * ((a1 - 1.0) * r**a2 + (1.0 - r) * a2 * r ** (a2 - 1.0))
            )
        else:
            scale = a0 * params.p0 ** (-a1)
            out = scale * (
                params.c_v * r**a2
                + a2 * (params.p0 - params.c_v * (1.0 - r)) * r ** (a2 - 1.0)
            )
    return out[()]


# %% local utils
def _check_rate(r):
    r = np.asarray(r, dtype=float)
    if np.any((r < 0) | (r > 1)) or np.any(np.isnan(r)):
        raise ValueError(f"recycling rate r must lie in [0, 1], got {r}")
    return r


def _check_price(p):
    p = np.asarray(p, dtype=float)
    if np.any(~(p > 0)):
        raise ValueError(f"price p must be positive, got {p}")
    return p


def _check_singular_endpoint(r):
    if np.any(r >= 1):
        raise ValueError("G is singular at r = 1 when a1 > 1 - keep r in [0, 1)")
