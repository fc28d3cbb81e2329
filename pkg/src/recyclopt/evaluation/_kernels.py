"""Compiled path-parallel discounted profit evaluation."""

__all__ = ["path_profits"]

import numpy as np
import numba as nb

from ..model._kernels import ALPHA, C_L, SIGMA, control_state, drift, profit
from ..policy._policy import evaluate_controls
from ..sde._kernels import project


@nb.njit(parallel=True, cache=True)
def path_profits(r0, dt, xi, code, u_fixed, p_fixed, xs, ws, theta):  # pragma: no cover
    """
    Realized discounted profit of each row of noise ``xi``.

    Repeats the regulated step of :func:`recyclopt.sde._kernels.simulate_kernel`
    without storing the series. Each path is accumulated sequentially, so the
    outputs do not depend on the number of threads.

    Returns
    -------
    j : np.ndarray
        Discounted profit per path.
    r_end : np.ndarray
        Terminal state per path.
    pi_max : np.ndarray
        Largest ``|pi|`` met along each path.
    p_spread : np.ndarray
        Range of the applied price along each path.

    """
    n_paths, n_steps = xi.shape
    sqrt_dt = np.sqrt(dt)
    sigma = theta[SIGMA]
    alpha = theta[ALPHA]
    c_l = theta[C_L]

    j = np.empty(n_paths)
    r_end = np.empty(n_paths)
    pi_max = np.empty(n_paths)
    p_spread = np.empty(n_paths)
    for m in nb.prange(n_paths):
        r = r0
        total = 0.0
        peak = 0.0
        p_lo = np.inf
        p_hi = -np.inf
        for i in range(n_steps):
            rc = control_state(r)
            u, p = evaluate_controls(rc, code, u_fixed, p_fixed, xs, ws, theta)
            pi = profit(p, u, rc, theta)
            proposal = r + drift(u, rc, theta) * dt + sigma * (sqrt_dt * xi[m, i])
            r, dl, du = project(proposal)
            total += np.exp(-alpha * (i * dt)) * (pi * dt - c_l * dl)
            if abs(pi) > peak:
                peak = abs(pi)
            if p < p_lo:
                p_lo = p
            if p > p_hi:
                p_hi = p
        j[m] = total
        r_end[m] = r
        pi_max[m] = peak
        p_spread[m] = p_hi - p_lo
    return j, r_end, pi_max, p_spread
