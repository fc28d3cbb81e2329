"""Feedback policies mapping the recycling rate to (investment, price)."""

__all__ = [
    "PolicyKind",
    "Policy",
    "make_policy",
    "policy_from_trajectory",
    "zero_policy",
    "fixed_policy",
]

from dataclasses import dataclass
from enum import Enum

import numpy as np
import numba as nb

from numpy.typing import ArrayLike

from .._exceptions import SolverError
from ..model import ModelParams
from ..model._kernels import F, optimal_price as _kernel_price
from ._hamiltonian import optimal_investment, optimal_price


class PolicyKind(Enum):
    """Kind of feedback policy."""

    OPTIMAL = 0  # interpolated Q' of the solved value function
    SHOT = 1  # interpolated W_k of an arbitrary shot trajectory
    ZERO = 2  # no investment, closed-form price
    FIXED = 3  # constant investment and price


@dataclass(frozen=True, eq=False)
class Policy:
    """
    Feedback policy ``r -> (u, p)``.

    For ``OPTIMAL`` and ``SHOT`` policies the investment is
    ``F((1 - r) Q'(r))`` with ``Q'`` a piecewise-linear interpolant of the
    shot trajectory clamped at zero and extended flat beyond the last grid
    node, and the price is the closed-form optimum. ``ZERO`` policies never
    invest and price optimally. ``FIXED`` policies apply constant controls.

    Use :func:`make_policy`, :func:`policy_from_trajectory`,
    :func:`zero_policy` or :func:`fixed_policy` to build instances.

    """

    kind: PolicyKind
    params: ModelParams
    label: str
    xs: np.ndarray | None = None
    qprime_values: np.ndarray | None = None
    u_fixed: float = 0.0
    p_fixed: float = 1.0
    solution: object = None

    def qprime(self, r: ArrayLike) -> np.ndarray:
        """Interpolated, non-negative ``Q'(r)`` (zero for constant policies)."""
        r = np.asarray(r, dtype=float)
        if self.qprime_values is None:
            return np.zeros_like(r)[()]
        return np.interp(r, self.xs, self.qprime_values)[()]

    def controls(self, r: ArrayLike) -> tuple[np.ndarray, np.ndarray]:
        """
        Evaluate the policy.

        Parameters
        ----------
        r : ArrayLike
            Recycling rate(s) in ``[0, 1]``.

        Returns
        -------
        u : np.ndarray
            Investment rate(s), ``>= 0``.
        p : np.ndarray
            Price(s), ``> 0``.

        """
        r = np.asarray(r, dtype=float)
        if self.kind == PolicyKind.FIXED:
            return (
                np.full_like(r, self.u_fixed)[()],
                np.full_like(r, self.p_fixed)[()],
            )
        p = optimal_price(r, self.params)
        if self.kind == PolicyKind.ZERO:
            return np.zeros_like(r)[()], p
        return optimal_investment(r, self.params, self.qprime(r)), p

    __call__ = controls

    def kernel_args(self) -> tuple:
        """Arguments of :func:`evaluate_controls` describing this policy."""
        if self.qprime_values is None:
            xs = np.zeros(2)
            ws = np.zeros(2)
        else:
            xs = np.ascontiguousarray(self.xs, dtype=np.float64)
            ws = np.ascontiguousarray(self.qprime_values, dtype=np.float64)
        return self.kind.value, float(self.u_fixed), float(self.p_fixed), xs, ws


def make_policy(sol, params: ModelParams) -> Policy:
    """
    Build the optimal feedback policy from a solved value function.

    Parameters
    ----------
    sol : HjbSolution
        Output of :func:`recyclopt.hjb.shoot_kstar`.
    params : ModelParams
        Model parameters the solution was computed with.

    Returns
    -------
    Policy
        ``OPTIMAL`` policy backed by the interpolated ``Q' = W_{k*}``.

    """
    policy = policy_from_trajectory(sol.trajectory, params, label="k*")
    return Policy(
        kind=PolicyKind.OPTIMAL,
        params=params,
        label=f"k*={sol.k_star:.6g}",
        xs=policy.xs,
        qprime_values=policy.qprime_values,
        solution=sol,
    )


def policy_from_trajectory(traj, params: ModelParams, label: str | None = None) -> Policy:
    """
    Build a feedback policy from an arbitrary shot trajectory ``W_k``.

    Negative values of ``W_k`` (trajectories below ``k*``) are clamped to zero,
    where the policy stops investing.

    Raises
    ------
    SolverError
        If the trajectory blew up before reaching the end of the grid.

    """
    if traj.truncated:
        raise SolverError(f"Trajectory for k={traj.k} blew up at x={traj.xs[-1]:.6g}")
    return Policy(
        kind=PolicyKind.SHOT,
        params=params,
        label=label or f"k={traj.k:.6g}",
        xs=np.asarray(traj.xs, dtype=float).copy(),
        qprime_values=np.maximum(np.asarray(traj.Ws, dtype=float), 0.0),
    )


def zero_policy(params: ModelParams) -> Policy:
    """Policy with no recycling investment and closed-form pricing."""
    return Policy(kind=PolicyKind.ZERO, params=params, label="zero")


def fixed_policy(u: float, p: float, params: ModelParams) -> Policy:
    """Policy applying a constant investment ``u >= 0`` and price ``p > 0``."""
    if u < 0:
        raise ValueError(f"fixed investment must be non-negative, got {u}")
    if not p > 0:
        raise ValueError(f"fixed price must be positive, got {p}")
    return Policy(
        kind=PolicyKind.FIXED,
        params=params,
        label=f"fixed(u={u:g},p={p:g})",
        u_fixed=float(u),
        p_fixed=float(p),
    )


@nb.njit(cache=True)
def evaluate_controls(r, code, u_fixed, p_fixed, xs, ws, theta):  # pragma: no cover
    """Compiled counterpart of :meth:`Policy.controls` for a scalar state."""
    if code == 3:
        return u_fixed, p_fixed
    p = _kernel_price(r, theta)
    if code == 2:
        return 0.0, p
    n = xs.shape[0]
    if r >= xs[n - 1]:
        q = ws[n - 1]
    elif r <= xs[0]:
        q = ws[0]
    else:
        # uniform grid: locate the cell directly, then fix rounding
        i = int(r / (xs[n - 1] / (n - 1)))
        if i > n - 2:
            i = n - 2
        while i > 0 and xs[i] > r:
            i -= 1
        while i < n - 2 and xs[i + 1] <= r:
            i += 1
        q = ws[i] + (ws[i + 1] - ws[i]) * (r - xs[i]) / (xs[i + 1] - xs[i])
    return F((1.0 - r) * q, theta), p
