"""Compiled projected Euler-Maruyama kernels."""

__all__ = ["project", "simulate_kernel"]

import numpy as np
import numba as nb

from ..model._kernels import SIGMA, control_state, drift
from ..policy._policy import evaluate_controls


@nb.njit(cache=True)
def project(proposal):  # pragma: no cover
    """One-step Skorokhod map onto ``[0, 1]``: ``(r, dL, dU)``."""
    if proposal < 0.0:
        return 0.0, -proposal, 0.0
    if proposal > 1.0:
        return 1.0, 0.0, proposal - 1.0
    return proposal, 0.0, 0.0


@nb.njit(cache=True)
def simulate_kernel(
    r0, dt, xi, regulated, code, u_fixed, p_fixed, xs, ws, theta
):  # pragma: no cover
    """
    Simulate one path driven by the standard normals ``xi``.

    Controls are frozen at the left endpoint of each step and, like the
    drift, see the state clamped into ``[0, R_MAX]``. Without regulation the
    stored state roams free.

    """
    n = xi.shape[0]
    sqrt_dt = np.sqrt(dt)
    sigma = theta[SIGMA]

    rs = np.empty(n + 1)
    Ls = np.zeros(n + 1)
    Us = np.zeros(n + 1)
    us = np.empty(n + 1)
    ps = np.empty(n + 1)
    dws = np.zeros(n + 1)

    rs[0] = r0
    for i in range(n):
        r = rs[i]
        rc = control_state(r)
        u, p = evaluate_controls(rc, code, u_fixed, p_fixed, xs, ws, theta)
        us[i] = u
        ps[i] = p

        dw = sqrt_dt * xi[i]
        dws[i] = dw
        proposal = r + drift(u, rc, theta) * dt + sigma * dw
        if regulated:
            r_next, dl, du = project(proposal)
        else:
            r_next, dl, du = proposal, 0.0, 0.0

        rs[i + 1] = r_next
        Ls[i + 1] = Ls[i] + dl
        Us[i + 1] = Us[i] + du

    u, p = evaluate_controls(control_state(rs[n]), code, u_fixed, p_fixed, xs, ws, theta)
    us[n] = u
    ps[n] = p
    return rs, Ls, Us, us, ps, dws
