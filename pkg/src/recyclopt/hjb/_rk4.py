"""Fixed-step fourth-order Runge-Kutta integrator for the shooting system."""

__all__ = ["integrate_system", "system_rhs"]

import numpy as np
import numba as nb

from ..model._kernels import ALPHA, DELTA, GAMMA, SIGMA
from ..model._kernels import F, G

# |W| or |Y| beyond this value counts as a blow-up
OVERFLOW = 1e150


@nb.njit(cache=True)
def _dw(x, y, w, theta):  # pragma: no cover
    gamma = theta[GAMMA]
    sigma2 = theta[SIGMA] * theta[SIGMA]
    damping = (1.0 - gamma) * (1.0 - x) ** (gamma / (gamma - 1.0)) * F(w, theta)
    return (
        2.0
        / sigma2
        * (damping + theta[DELTA] * x * w - G(x, theta) + theta[ALPHA] * y)
    )


@nb.njit(cache=True)
def system_rhs(xs, ys, ws, theta):  # pragma: no cover
    """Evaluate ``W'`` of the first-order system on a grid."""
    out = np.empty_like(ws)
    for i in range(ws.shape[0]):
        out[i] = _dw(xs[i], ys[i], ws[i], theta)
    return out


@nb.njit(cache=True)
def integrate_system(y0, w0, x_end, n, theta):  # pragma: no cover
    """
    Integrate ``Y' = W``, ``W' = f(x, Y, W)`` on ``n`` uniform steps of ``[0, x_end]``.

    Returns the grid, the ``Y`` and ``W`` series and the number of valid
    nodes; integration stops at the first non-finite or overflowing state.

    """
    h = x_end / n
    xs = np.empty(n + 1)
    ys = np.empty(n + 1)
    ws = np.empty(n + 1)
    xs[0] = 0.0
    ys[0] = y0
    ws[0] = w0
    for i in range(n):
        x = i * h
        y = ys[i]
        w = ws[i]

        k1y = w
        k1w = _dw(x, y, w, theta)
        k2y = w + 0.5 * h * k1w
        k2w = _dw(x + 0.5 * h, y + 0.5 * h * k1y, w + 0.5 * h * k1w, theta)
        k3y = w + 0.5 * h * k2w
        k3w = _dw(x + 0.5 * h, y + 0.5 * h * k2y, w + 0.5 * h * k2w, theta)
        k4y = w + h * k3w
        k4w = _dw(x + h, y + h * k3y, w + h * k3w, theta)

        y_next = y + h * (k1y + 2.0 * k2y + 2.0 * k3y + k4y) / 6.0
        w_next = w + h * (k1w + 2.0 * k2w + 2.0 * k3w + k4w) / 6.0

        if not (np.isfinite(y_next) and np.isfinite(w_next)):
            return xs, ys, ws, i + 1
        if abs(y_next) > OVERFLOW or abs(w_next) > OVERFLOW:
            return xs, ys, ws, i + 1

        # last node sits exactly on x_end
        xs[i + 1] = x_end if i == n - 1 else (i + 1) * h
        ys[i + 1] = y_next
        ws[i + 1] = w_next

    return xs, ys, ws, n + 1
