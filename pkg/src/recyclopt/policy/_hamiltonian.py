"""Closed-form optimizers and Hamiltonian of the HJB equation."""

__all__ = [
    "P_MIN",
    "optimal_price",
    "optimal_investment",
    "hamiltonian",
    "argmax_hamiltonian_bruteforce",
]

import numpy as np

from numpy.typing import ArrayLike

from ..model import F, ModelParams, drift_R, profit
from ..model._kernels import P_MIN


def optimal_price(r: ArrayLike, params: ModelParams, p_min: float = P_MIN) -> np.ndarray:
    """
    Optimal retail price as a function of the recycling rate.

    Parameters
    ----------
    r : ArrayLike
        Recycling rate in ``[0, 1]``.
    params : ModelParams
        Model parameters.
    p_min : float, optional
        Price floor applied when the closed form vanishes (``r -> 1``).
        The default is ``1e-9``.

    Returns
    -------
    np.ndarray
        ``a1 c_v (1 - r) / (a1 - 1)`` floored at ``p_min`` if ``a1 > 1``,
        the price cap ``p0`` otherwise.

    """
    r = np.asarray(r, dtype=float)
    if params.price_capped:
        return np.full_like(r, params.p0)[()]
    a1 = params.a1
    return np.maximum(a1 * params.c_v * (1.0 - r) / (a1 - 1.0), p_min)[()]


def optimal_investment(
    r: ArrayLike, params: ModelParams, qprime_at_r: ArrayLike
) -> np.ndarray:
    """
    Optimal recycling investment ``u* = ((1 - r) Q'(r))**(gamma/(gamma-1))``.

    Evaluated as ``F((1 - r) Q'(r))``, which is finite at ``Q' = 0`` and
    vanishes for ``Q' <= 0``.

    """
    r = np.asarray(r, dtype=float)
    return F((1.0 - r) * np.asarray(qprime_at_r, dtype=float), params)


def hamiltonian(
    u: ArrayLike,
    p: ArrayLike,
    r: ArrayLike,
    q: ArrayLike,
    qp: ArrayLike,
    qpp: ArrayLike,
    params: ModelParams,
) -> np.ndarray:
    """
    Supremand of the HJB equation.

    ``sigma**2/2 q'' + q' R(u, r) + pi(p, u, r) - alpha q``, with
    ``R`` the recycling drift and ``pi`` the instantaneous profit.

    """
    qpp = np.asarray(qpp, dtype=float)
    qp = np.asarray(qp, dtype=float)
    q = np.asarray(q, dtype=float)
    return (
        0.5 * params.sigma2 * qpp
        + qp * drift_R(u, r, params)
        + profit(p, u, r, params)
        - params.alpha * q
    )[()]


def argmax_hamiltonian_bruteforce(
    r: float,
    q: float,
    qp: float,
    qpp: float,
    params: ModelParams,
    u_max: float,
    p_max: float,
    grid: int = 400,
    p_min: float = P_MIN,
) -> tuple[float, float]:
    """
    Maximize the Hamiltonian on a ``grid x grid`` lattice.

    Parameters
    ----------
    r, q, qp, qpp : float
        State and value-function derivatives.
    params : ModelParams
        Model parameters.
    u_max : float
        Upper end of the investment lattice ``[0, u_max]``.
    p_max : float
        Upper end of the price lattice ``[p_min, p_max]``.
    grid : int, optional
        Lattice size per axis. Must be ``>= 100``. The default is ``400``.
    p_min : float, optional
        Lower end of the price lattice. The default is ``1e-9``.

    Returns
    -------
    tuple[float, float]
        Lattice maximizer ``(u, p)``. Ties resolve toward the smaller
        ``(u, p)`` in lexicographic order.

    """
    if grid < 100:
        raise ValueError(f"grid must be >= 100, got {grid}")
    if not (u_max > 0 and p_max > 0):
        raise ValueError(f"u_max and p_max must be positive, got {u_max}, {p_max}")
    us = np.linspace(0.0, u_max, grid)
    ps = np.linspace(p_min, p_max, grid)
    uu, pp = np.meshgrid(us, ps, indexing="ij")
    values = hamiltonian(uu, pp, r, q, qp, qpp, params)
    iu, ip = np.unravel_index(np.argmax(values), values.shape)
    return float(us[iu]), float(ps[ip])
