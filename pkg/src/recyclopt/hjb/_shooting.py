"""Shooting solver for the value function of the recycling control problem."""

__all__ = [
    "ShootConfig",
    "ProfileKind",
    "Classification",
    "WTrajectory",
    "HjbSolution",
    "integrate_W",
    "integration_constant",
    "classify",
    "shoot_kstar",
    "scan_trajectories",
]

import logging
import math
import warnings

from dataclasses import asdict as _asdict
from dataclasses import dataclass, field
from enum import Enum

import numpy as np

from .._exceptions import ConsistencyError, SolverError, ValidationError
from ..model import F, ModelParams, validate
from ..model._kernels import pack
from ._residual import hjb_residual
from ._rk4 import integrate_system

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ShootConfig:
    """
    Discretization and root-finding settings of the shooting solver.

    Attributes
    ----------
    grid_n : int
        Number of uniform RK4 steps on ``[0, 1 - eps_boundary]``.
        Must be ``>= 100``. The default is ``4000``.
    eps_boundary : float
        Right-endpoint inset keeping the grid away from the singularity of
        ``G`` at ``x = 1``. Must lie in ``(0, 1e-3]``. The default is ``1e-6``.
    k_lo, k_hi : float
        Initial bracket for the slope ``k = W'(0)``. The defaults are ``-2`` and ``2``.
    tol_k : float
        Bisection termination width on ``k``. The default is ``1e-10``.
    tol_terminal : float
        Acceptance tolerance on ``|W(1 - eps_boundary)|``. The default is ``1e-6``.
    max_doublings : int
        Maximum number of bracket expansions. The default is ``20``.
    max_iter : int
        Maximum number of bisection steps. The default is ``200``.

    """

    grid_n: int = 4000
    eps_boundary: float = 1e-6
    k_lo: float = -2.0
    k_hi: float = 2.0
    tol_k: float = 1e-10
    tol_terminal: float = 1e-6
    max_doublings: int = 20
    max_iter: int = 200

    def __post_init__(self):
        if int(self.grid_n) != self.grid_n or self.grid_n < 100:
            raise ValidationError(f"grid_n must be an integer >= 100, got {self.grid_n}")
        if not 0 < self.eps_boundary <= 1e-3:
            raise ValidationError(
                f"eps_boundary must lie in (0, 1e-3], got {self.eps_boundary}"
            )
        if not self.k_lo < self.k_hi:
            raise ValidationError(
                f"k_lo must be smaller than k_hi, got ({self.k_lo}, {self.k_hi})"
            )
        if not (self.tol_k > 0 and self.tol_terminal > 0):
            raise ValidationError("tol_k and tol_terminal must be positive")

    @property
    def x_end(self) -> float:
        """Right end of the integration grid."""
        return 1.0 - self.eps_boundary

    def asdict(self) -> dict:
        """Return settings as a plain dictionary."""
        return _asdict(self)


class ProfileKind(Enum):
    """Shape of a shot trajectory ``W_k``."""

    CROSSES_EARLY = "crosses_early"
    POSITIVE_WITH_LOCAL_MAX = "positive_with_local_max"
    POSITIVE_NO_MAX = "positive_no_max"
    POSITIVE_DECREASING = "positive_decreasing"
    TERMINAL_NEGATIVE = "terminal_negative"

    @property
    def undershoots(self) -> bool:
        """``True`` if the slope ``k`` lies below ``k*``."""
        return self in (ProfileKind.CROSSES_EARLY, ProfileKind.TERMINAL_NEGATIVE)


@dataclass(frozen=True)
class Classification:
    """
    Trajectory classification.

    Attributes
    ----------
    kind : ProfileKind
        Profile shape.
    c_k : float | None
        First zero of ``W`` (linear interpolation), if any.
    max_index : int | None
        Grid index of the first interior strict local maximum, if any.

    """

    kind: ProfileKind
    c_k: float | None = None
    max_index: int | None = None


@dataclass
class WTrajectory:
    """
    Solution of the initial-value problem for a fixed slope ``k``.

    ``Ws`` is the candidate for ``Q'`` and ``Ys`` the candidate for ``Q``;
    ``W(0) = C_L``, ``W'(0) = k`` and ``Y(0) = K_k``.

    """

    k: float
    K_k: float
    xs: np.ndarray
    Ws: np.ndarray
    Ys: np.ndarray
    truncated: bool = False
    classification: Classification | None = None

    @property
    def terminal_value(self) -> float:
        """``W`` at the right end of the grid (``-inf``/``+inf`` on blow-up)."""
        if not self.truncated:
            return float(self.Ws[-1])
        return -math.inf if self.Ws[-1] < 0 else math.inf


@dataclass
class HjbSolution:
    """
    Value function assembled from the optimal shot ``W_{k*}``.

    Attributes
    ----------
    k_star : float
        Optimal initial slope.
    trajectory : WTrajectory
        Trajectory for ``k_star``.
    residual_sup : float
        Normalized sup of the HJB residual over the interior grid.
    Q_of_r0 : float
        Value function at the configured initial state ``r0``.
    r0 : float
        Initial state used for ``Q_of_r0``.
    config : ShootConfig
        Settings the solution was computed with.

    """

    k_star: float
    trajectory: WTrajectory
    residual_sup: float = math.nan
    Q_of_r0: float = math.nan
    r0: float = 0.5
    config: ShootConfig = field(default_factory=ShootConfig)

    @property
    def K_k(self) -> float:
        """Integration constant ``Q(0)``."""
        return self.trajectory.K_k

    def Q(self, r: float | np.ndarray) -> np.ndarray:
        """Interpolate the value function; flat beyond ``1 - eps_boundary``."""
        traj = self.trajectory
        return np.interp(r, traj.xs, traj.Ys)[()]

    def Q_prime(self, r: float | np.ndarray) -> np.ndarray:
        """Interpolate ``Q'``; flat beyond ``1 - eps_boundary``."""
        traj = self.trajectory
        return np.interp(r, traj.xs, traj.Ws)[()]


def integrate_W(
    k: float, params: ModelParams, cfg: ShootConfig | None = None
) -> WTrajectory:
    """
    Integrate the shooting system for a given initial slope.

    The system reads ``Y' = W`` and
    ``W' = 2/sigma**2 [(1 - gamma)(1 - x)**(gamma/(gamma-1)) F(W) + delta x W - G(x) + alpha Y]``,
    with ``W(0) = C_L`` and ``Y(0) = K_k``, where
    ``K_k = (sigma**2/2 k + (gamma - 1) F(C_L)) / alpha`` enforces ``W'(0) = k``.

    Parameters
    ----------
    k : float
        Initial slope ``W'(0)``.
    params : ModelParams
        Model parameters. ``sigma`` must be positive.
    cfg : ShootConfig, optional
        Discretization settings. The default is ``ShootConfig()``.

    Returns
    -------
    WTrajectory
        Classified trajectory. On blow-up, the series are truncated at the
        last finite node.

    """
    cfg = cfg or ShootConfig()
    _check_diffusive(params)
    K_k = integration_constant(k, params)
    xs, ys, ws, n_valid = integrate_system(
        K_k, params.C_L, cfg.x_end, int(cfg.grid_n), pack(params)
    )
    traj = WTrajectory(
        k=float(k),
        K_k=K_k,
        xs=xs[:n_valid].copy(),
        Ws=ws[:n_valid].copy(),
        Ys=ys[:n_valid].copy(),
        truncated=n_valid < cfg.grid_n + 1,
    )
    traj.classification = classify(traj, cfg)
    return traj


def integration_constant(k: float, params: ModelParams) -> float:
    """Return ``K_k = (sigma**2/2 k + (gamma - 1) F(C_L)) / alpha``."""
    return float(
        (0.5 * params.sigma2 * k + (params.gamma - 1.0) * F(params.C_L, params))
        / params.alpha
    )


def classify(traj: WTrajectory, cfg: ShootConfig | None = None) -> Classification:
    """
    Classify the profile of a shot trajectory.

    Parameters
    ----------
    traj : WTrajectory
        Trajectory, integrated on the full or a truncated grid.
    cfg : ShootConfig, optional
        Settings the trajectory was integrated with. When given, a series
        shorter than ``cfg.grid_n + 1`` nodes counts as truncated.

    Returns
    -------
    Classification
        ``TERMINAL_NEGATIVE`` if the series is truncated by a blow-down
        (last finite value negative), ``CROSSES_EARLY`` for any other sign
        change. Non-negative series are ``POSITIVE_WITH_LOCAL_MAX`` when they
        have an interior strict local maximum, ``POSITIVE_NO_MAX`` when they
        are nondecreasing and ``POSITIVE_DECREASING`` otherwise (e.g. a
        monotone decay from ``C_L``).

    """
    xs = np.asarray(traj.xs, dtype=float)
    ws = np.asarray(traj.Ws, dtype=float)
    n = ws.shape[0]
    truncated = traj.truncated
    if cfg is not None:
        truncated = truncated or n < cfg.grid_n + 1

    negative = np.flatnonzero(ws < 0)
    if negative.size > 0:
        c_k = _zero_crossing(xs, ws, int(negative[0]))
        if truncated and ws[-1] < 0:
            return Classification(ProfileKind.TERMINAL_NEGATIVE, c_k=c_k)
        return Classification(ProfileKind.CROSSES_EARLY, c_k=c_k)

    if n >= 3:
        interior = (ws[1:-1] > ws[:-2]) & (ws[1:-1] > ws[2:])
        peaks = np.flatnonzero(interior)
        if peaks.size > 0:
            return Classification(
                ProfileKind.POSITIVE_WITH_LOCAL_MAX, max_index=int(peaks[0]) + 1
            )
    if np.all(np.diff(ws) >= 0):
        return Classification(ProfileKind.POSITIVE_NO_MAX)
    return Classification(ProfileKind.POSITIVE_DECREASING)


def shoot_kstar(
    params: ModelParams, cfg: ShootConfig | None = None, r0: float = 0.5
) -> HjbSolution:
    """
    Locate the optimal initial slope ``k*`` by bracketing and bisection.

    ``k*`` is the infimum of the slopes whose trajectory stays non-negative
    with a local maximum. Terminal values ``W_k(1 - eps)`` are nondecreasing
    in ``k``, so the bracket ``[k_lo, k_hi]`` is first expanded until ``k_lo``
    undershoots (``W`` crosses zero) and ``k_hi`` does not, then bisected
    until it is narrower than ``tol_k`` and ``|W_{k_hi}(1 - eps)| <= tol_terminal``.
    Ties resolve toward the larger slope. A warning is issued when the
    resulting trajectory has no interior maximum: the terminal condition is
    met but ``W_{k*}`` does not have the expected hump shape.

    Parameters
    ----------
    params : ModelParams
        Model parameters. ``sigma`` must be positive.
    cfg : ShootConfig, optional
        Solver settings. The default is ``ShootConfig()``.
    r0 : float, optional
        State at which ``Q`` is reported. The default is ``0.5``.

    Returns
    -------
    HjbSolution
        Optimal slope, trajectory and residual diagnostics.

    Raises
    ------
    SolverError
        If the bracket cannot be established or the terminal tolerance is not
        reached within ``max_iter`` bisection steps.
    ConsistencyError
        If terminal values are not monotone in ``k`` (integrator too coarse).

    """
    cfg = cfg or ShootConfig()
    validate(params)
    _check_diffusive(params)

    lo, hi = float(cfg.k_lo), float(cfg.k_hi)
    traj_lo = integrate_W(lo, params, cfg)
    traj_hi = integrate_W(hi, params, cfg)
    for _ in range(cfg.max_doublings):
        if traj_lo.classification.kind.undershoots:
            break
        lo -= hi - lo
        logger.debug(f"Expanding lower bracket end to k={lo}")
        traj_lo = integrate_W(lo, params, cfg)
    for _ in range(cfg.max_doublings):
        if not traj_hi.classification.kind.undershoots:
            break
        hi += hi - lo
        logger.debug(f"Expanding upper bracket end to k={hi}")
        traj_hi = integrate_W(hi, params, cfg)
    if not traj_lo.classification.kind.undershoots:
        raise SolverError(
            f"No undershooting slope found after {cfg.max_doublings} doublings (k_lo={lo})"
        )
    if traj_hi.classification.kind.undershoots:
        raise SolverError(
            f"No overshooting slope found after {cfg.max_doublings} doublings (k_hi={hi})"
        )

    for it in range(cfg.max_iter):
        converged = hi - lo <= cfg.tol_k
        if converged and abs(traj_hi.terminal_value) <= cfg.tol_terminal:
            break
        mid = 0.5 * (lo + hi)
        if mid in (lo, hi):  # bracket at floating point resolution
            break
        traj_mid = integrate_W(mid, params, cfg)
        _check_monotone(traj_lo, traj_mid, traj_hi, cfg.tol_terminal)
        if traj_mid.classification.kind.undershoots:
            lo, traj_lo = mid, traj_mid
        else:
            hi, traj_hi = mid, traj_mid
        logger.debug(
            f"Bisection {it}: k in [{lo:.12g}, {hi:.12g}],"
            f" W(end)={traj_mid.terminal_value:.3e} ({traj_mid.classification.kind.value})"
        )

    terminal = traj_hi.terminal_value
    if abs(terminal) > cfg.tol_terminal:
        raise SolverError(
            f"Terminal condition not met: |W(1-eps)|={abs(terminal):.3e}"
            f" > tol_terminal={cfg.tol_terminal} at k={hi}"
        )
    if traj_hi.Ws.min() < -cfg.tol_terminal:
        raise SolverError(f"Optimal trajectory turns negative (min W={traj_hi.Ws.min()})")
    kind = traj_hi.classification.kind
    if kind is not ProfileKind.POSITIVE_WITH_LOCAL_MAX:
        warnings.warn(
            f"W at k={hi:.6g} has no interior maximum ({kind.value})"
            " - the hump condition on k* is not met for these parameters"
        )

    solution = HjbSolution(k_star=hi, trajectory=traj_hi, r0=r0, config=cfg)
    solution.residual_sup = hjb_residual(solution, params)
    solution.Q_of_r0 = float(solution.Q(r0))
    logger.info(
        f"k*={hi:.12g}, K_k={traj_hi.K_k:.6g}, W(1-eps)={terminal:.3e},"
        f" residual={solution.residual_sup:.3e}, Q({r0})={solution.Q_of_r0:.6g}"
    )
    if solution.residual_sup > 1e-3:
        warnings.warn(
            f"HJB residual {solution.residual_sup:.3e} exceeds 1e-3 - consider a finer grid"
        )
    return solution


def scan_trajectories(
    k_values: list[float], params: ModelParams, cfg: ShootConfig | None = None
) -> list[WTrajectory]:
    """
    Integrate a family of trajectories ``W_k``, one per slope.

    Used to display how the profile changes across ``k*``.

    """
    validate(params)
    return [integrate_W(k, params, cfg) for k in k_values]


# %% local utils
def _check_diffusive(params):
    if not params.sigma > 0:
        raise ValidationError(
            f"the shooting solver requires sigma > 0, got {params.sigma}"
        )


def _zero_crossing(xs, ws, i):
    if i == 0:
        return float(xs[0])
    x0, x1 = xs[i - 1], xs[i]
    w0, w1 = ws[i - 1], ws[i]
    return float(x0 + (x1 - x0) * w0 / (w0 - w1))


def _check_monotone(traj_lo, traj_mid, traj_hi, tol):
    g_lo, g_mid, g_hi = (
        traj_lo.terminal_value,
        traj_mid.terminal_value,
        traj_hi.terminal_value,
    )
    if g_mid < g_lo - tol or g_mid > g_hi + tol:
        raise ConsistencyError(
            f"Terminal values not monotone in k: W(k={traj_lo.k})={g_lo:.6g},"
            f" W(k={traj_mid.k})={g_mid:.6g}, W(k={traj_hi.k})={g_hi:.6g}"
        )
