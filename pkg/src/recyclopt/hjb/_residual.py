"""HJB residual diagnostics."""

__all__ = ["hjb_operator", "residual_profile", "hjb_residual", "second_derivative"]

import numpy as np

from scipy.integrate import cumulative_trapezoid

from ..model import F, F_prime, G, G_prime, ModelParams
from ..model._kernels import pack
from ._rk4 import system_rhs

# |W| below this threshold switches W'' to central differences (F' kinks at 0)
KINK_THRESHOLD = 1e-12


def hjb_operator(
    xs: np.ndarray,
    Q: np.ndarray,
    Qp: np.ndarray,
    Qpp: np.ndarray,
    params: ModelParams,
) -> np.ndarray:
    """
    Evaluate the left-hand side of the extended HJB equation pointwise.

    ``sigma**2/2 Q'' + (gamma - 1)(1 - x)**(gamma/(gamma-1)) F(Q') - delta x Q' + G(x) - alpha Q``,
    which vanishes on an exact solution.

    Parameters
    ----------
    xs : np.ndarray
        Abscissae in ``[0, 1)``.
    Q, Qp, Qpp : np.ndarray
        Value function and its first two derivatives at ``xs``.
    params : ModelParams
        Model parameters.

    Returns
    -------
    np.ndarray
        Residual at each abscissa.

    """
    xs = np.asarray(xs, dtype=float)
    Q, Qp, Qpp = np.broadcast_arrays(
        *[np.asarray(arr, dtype=float) for arr in (Q, Qp, Qpp)]
    )
    gamma = params.gamma
    damping = (gamma - 1.0) * (1.0 - xs) ** (gamma / (gamma - 1.0)) * F(Qp, params)
    return (
        0.5 * params.sigma2 * Qpp
        + damping
        - params.delta * xs * Qp
        + G(xs, params)
        - params.alpha * Q
    )


def residual_profile(
    sol, params: ModelParams, method: str = "analytic"
) -> tuple[np.ndarray, np.ndarray]:
    """
    Normalized HJB residual over the interior grid.

    Parameters
    ----------
    sol : HjbSolution
        Solved value function.
    params : ModelParams
        Model parameters.
    method : str, optional
        How ``Q''`` and ``Q`` are obtained. Can be either ``"analytic"`` or
        ``"difference"``. If ``"analytic"``, ``Q''`` is the right-hand side of
        the first-order system and ``Q`` is rebuilt from ``Q'`` by trapezoidal
        quadrature, independently of the integrator's ``Y`` stages. If
        ``"difference"``, ``Q''`` comes from second-order central differences
        of ``Q'`` and ``Q`` is the integrator's ``Y``.
        The default is ``"analytic"``.

    Returns
    -------
    xs : np.ndarray
        Interior abscissae ``[2/n, 1 - eps - 2/n]``.
    residual : np.ndarray
        ``|residual| / (1 + |alpha Q|)`` at ``xs``.

    """
    traj = sol.trajectory
    xs, ws, ys = traj.xs, traj.Ws, traj.Ys
    if method == "analytic":
        Qpp = system_rhs(xs, ys, ws, pack(params))
        Q = traj.K_k + cumulative_trapezoid(ws, xs, initial=0.0)
    elif method == "difference":
        Qpp = np.gradient(ws, xs)
        Q = ys
    else:
        raise ValueError(
            f"Unrecognized residual method: {method} - must be either 'analytic' or 'difference'."
        )

    margin = 2.0 / sol.config.grid_n
    inside = (xs >= margin) & (xs <= sol.config.x_end - margin)
    residual = hjb_operator(xs[inside], Q[inside], ws[inside], Qpp[inside], params)
    return xs[inside], np.abs(residual) / (1.0 + np.abs(params.alpha * Q[inside]))


def hjb_residual(sol, params: ModelParams, method: str = "analytic") -> float:
    """
    Sup-norm of the normalized HJB residual over the interior grid.

    See :func:`residual_profile` for the available methods.

    """
    _, residual = residual_profile(sol, params, method)
    return float(residual.max())


def second_derivative(traj, params: ModelParams) -> np.ndarray:
    """
    Second derivative ``W''`` of a shot trajectory.

    Uses the differentiated form of the ``W`` equation,
    ``sigma**2/2 W'' = (alpha + delta) W + gamma (1 - x)**(1/(gamma-1)) F(W)
    - (gamma - 1)(1 - x)**(gamma/(gamma-1)) F'(W) W' + delta x W' - G'(x)``,
    falling back to central differences of ``W'`` where ``|W|`` is below
    ``1e-12`` (``F'`` has a kink at zero).

    """
    xs, ws, ys = traj.xs, traj.Ws, traj.Ys
    gamma = params.gamma
    dw = system_rhs(xs, ys, ws, pack(params))
    one_minus_x = 1.0 - xs
    ddw = (
        2.0
        / params.sigma2
        * (
            (params.alpha + params.delta) * ws
            + gamma * one_minus_x ** (1.0 / (gamma - 1.0)) * F(ws, params)
            - (gamma - 1.0)
            * one_minus_x ** (gamma / (gamma - 1.0))
            * F_prime(ws, params)
            * dw
            + params.delta * xs * dw
            - G_prime(xs, params)
        )
    )
    kink = np.abs(ws) < KINK_THRESHOLD
    if np.any(kink):
        ddw[kink] = np.gradient(dw, xs)[kink]
    return ddw
