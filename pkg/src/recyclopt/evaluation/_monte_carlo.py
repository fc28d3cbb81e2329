"""Monte Carlo evaluation of the discounted profit functional."""

__all__ = [
    "EvalReport",
    "VerificationResult",
    "discounted_profit",
    "monte_carlo_J",
    "evaluate_policies",
    "compare_policies",
    "paired_difference",
    "verification_inequality",
    "reports_to_frame",
    "num_threads",
]

import logging
import math
import warnings

from contextlib import contextmanager
from dataclasses import dataclass, field

import numpy as np
import numba as nb
import pandas as pd

from scipy.stats import norm

from ..hjb import HjbSolution, ShootConfig, integrate_W, shoot_kstar
from ..model import ModelParams, profit, validate
from ..model._kernels import R_MAX, pack
from ..policy import Policy, policy_from_trajectory
from ..sde import RegulatedPath, SimConfig, noise_block
from ._kernels import path_profits

logger = logging.getLogger(__name__)

# paths simulated per noise block
BATCH_SIZE = 64

# confidence level of the reported interval
CONFIDENCE = 0.95

# default number of simulated paths
N_PATHS = 1000


@dataclass(eq=False)
class EvalReport:
    """
    Monte Carlo estimate of the discounted profit of one policy.

    Attributes
    ----------
    policy_label : str
        Policy label.
    j_mean : float
        Sample mean of the realized discounted profits.
    j_se : float
        Standard error of ``j_mean``.
    n_paths : int
        Number of simulated paths.
    q_of_r0 : float | None
        Solved value function at the initial state, if available.
    ci_low, ci_high : float
        Normal 95% confidence interval of ``j_mean``.
    mean_terminal_r : float
        Mean state at the horizon.
    tail_bound : float
        Bound ``exp(-alpha T) pi_max / alpha`` on the truncated tail.
    noise_checksum : float
        Sum of all standard normals consumed; equal across policies
        evaluated with common random numbers.
    price_spread : float
        Largest range of the applied price along a path.
    samples : np.ndarray
        Realized discounted profit per path, in path-index order.

    """

    policy_label: str
    j_mean: float
    j_se: float
    n_paths: int
    q_of_r0: float | None = None
    ci_low: float = math.nan
    ci_high: float = math.nan
    mean_terminal_r: float = math.nan
    tail_bound: float = math.nan
    noise_checksum: float = math.nan
    price_spread: float = math.nan
    samples: np.ndarray = field(default=None, repr=False)

    def summary(self) -> dict:
        """Scalar fields as a dictionary (``samples`` excluded)."""
        return {
            "policy_label": self.policy_label,
            "j_mean": self.j_mean,
            "j_se": self.j_se,
            "n_paths": self.n_paths,
            "q_of_r0": self.q_of_r0,
            "ci_low": self.ci_low,
            "ci_high": self.ci_high,
            "mean_terminal_r": self.mean_terminal_r,
            "tail_bound": self.tail_bound,
            "noise_checksum": self.noise_checksum,
            "price_spread": self.price_spread,
        }


@dataclass(frozen=True)
class VerificationResult:
    """
    Outcome of the upper-bound check ``J <= Q(r0)``.

    ``margin = Q(r0) + 3 j_se + disc_allowance |Q(r0)| - j_mean``; the
    check holds when the margin is non-negative.

    """

    holds: bool
    margin: float
    q_of_r0: float
    report: EvalReport

    @property
    def tolerance(self) -> float:
        """Half-width ``3 j_se + disc_allowance |Q(r0)|`` of the accepted band."""
        return self.margin - (self.q_of_r0 - self.report.j_mean)


def discounted_profit(path: RegulatedPath, params: ModelParams) -> float:
    """
    Realized discounted profit of a stored path.

    Computes ``sum_i exp(-alpha t_i) [pi(p_i, u_i, r_i) dt - C_L dL_i]`` over
    the steps of the path, with controls and state taken at the left
    endpoint and ``dL_i = L_{i+1} - L_i``. The state entering the profit is
    clamped into ``[0, R_MAX]``, as in the simulation kernels.

    Raises
    ------
    ValueError
        If the series lengths disagree or the path has no step.

    """
    n = len(path.ts)
    lengths = {name: len(getattr(path, name)) for name in ("rs", "Ls", "us", "ps")}
    if any(length != n for length in lengths.values()):
        raise ValueError(f"Inconsistent series lengths: ts={n}, {lengths}")
    if n < 2:
        raise ValueError(f"path must contain at least one step, got {n} nodes")

    ts = np.asarray(path.ts, dtype=float)
    dt = np.diff(ts)
    rs = np.clip(path.rs[:-1], 0.0, R_MAX)
    pi = profit(path.ps[:-1], path.us[:-1], rs, params)
    dL = np.diff(path.Ls)
    discount = np.exp(-params.alpha * ts[:-1])
    return float(np.sum(discount * (pi * dt - params.C_L * dL)))


def evaluate_policies(
    policies: list[Policy],
    params: ModelParams,
    cfg: SimConfig | None = None,
    n_paths: int = N_PATHS,
    base_seed: int | None = None,
    threads: int | None = None,
    batch_size: int = BATCH_SIZE,
    tail_fraction: float = 1e-3,
) -> list[EvalReport]:
    """
    Evaluate several policies on common random numbers.

    Path ``i`` of every policy is driven by the same noise stream
    ``(base_seed, i)``; each block of noise is drawn once and shared.

    Parameters
    ----------
    policies : list[Policy]
        Policies to evaluate.
    params : ModelParams
        Model parameters.
    cfg : SimConfig, optional
        Simulation settings. ``cfg.T = None`` selects the ``40 / alpha``
        horizon. Evaluation is always regulated. The default is
        ``SimConfig(T=None)``.
    n_paths : int, optional
        Number of paths. Must be ``>= 2``. The default is ``1000``.
    base_seed : int, optional
        Seed of the noise streams. The default is ``cfg.seed``.
    threads : int, optional
        Cap on the number of worker threads. Results do not depend on it.
        The default is ``None`` (numba default).
    batch_size : int, optional
        Paths per noise block. The default is ``64``.
    tail_fraction : float, optional
        A warning is issued if the truncated tail bound exceeds this
        fraction of ``|j_mean|``. The default is ``1e-3``.

    Returns
    -------
    list[EvalReport]
        One report per policy, in input order.

    """
    cfg = cfg or SimConfig(T=None)
    validate(params)
    if n_paths < 2:
        raise ValueError(f"n_paths must be >= 2, got {n_paths}")
    if batch_size < 1:
        raise ValueError(f"batch_size must be positive, got {batch_size}")
    base_seed = cfg.seed if base_seed is None else base_seed

    theta = pack(params)
    horizon = cfg.horizon(params)
    n_steps = cfg.n_steps(params)
    args = [policy.kernel_args() for policy in policies]
    # per policy: j, r_end, pi_max, p_spread
    outputs = [[np.empty(n_paths) for _ in range(4)] for _ in policies]
    checksums = np.empty(n_paths)

    logger.info(
        f"Evaluating {len(policies)} policies on {n_paths} paths"
        f" of {n_steps} steps (T={horizon:g}, dt={cfg.dt:g}, seed={base_seed})"
    )
    with num_threads(threads):
        for start in range(0, n_paths, batch_size):
            count = min(batch_size, n_paths - start)
            xi = noise_block(base_seed, start, count, n_steps)
            checksums[start : start + count] = xi.sum(axis=1)
            for out, arg in zip(outputs, args):
                chunk = path_profits(float(cfg.r0), float(cfg.dt), xi, *arg, theta)
                for dst, src in zip(out, chunk):
                    dst[start : start + count] = src

    checksum = float(np.sum(checksums))
    reports = []
    for policy, (j, r_end, pi_max, p_spread) in zip(policies, outputs):
        report = _make_report(policy, j, r_end, pi_max, p_spread, params, horizon)
        report.noise_checksum = checksum
        if report.q_of_r0 is None and policy.solution is not None:
            report.q_of_r0 = float(policy.solution.Q(cfg.r0))
        if report.tail_bound > tail_fraction * abs(report.j_mean):
            warnings.warn(
                f"Truncation tail bound {report.tail_bound:.3e} exceeds"
                f" {tail_fraction:g} |j_mean| for policy {policy.label} - consider a longer horizon"
            )
        logger.info(
            f"{policy.label}: J={report.j_mean:.6g} +/- {report.j_se:.3g}"
            f" (tail bound {report.tail_bound:.2e})"
        )
        reports.append(report)
    return reports


def monte_carlo_J(
    policy: Policy,
    params: ModelParams,
    cfg: SimConfig | None = None,
    n_paths: int = N_PATHS,
    base_seed: int | None = None,
    **kwargs,
) -> EvalReport:
    """
    Monte Carlo estimate of the discounted profit of a policy.

    See :func:`evaluate_policies` for the keyword arguments.

    """
    return evaluate_policies([policy], params, cfg, n_paths, base_seed, **kwargs)[0]


def compare_policies(
    k_values: list[float],
    params: ModelParams,
    cfg: SimConfig | None = None,
    n_paths: int = N_PATHS,
    base_seed: int | None = None,
    shoot_cfg: ShootConfig | None = None,
    sol: HjbSolution | None = None,
    include_k_star: bool = False,
    **kwargs,
) -> list[EvalReport]:
    """
    Evaluate the policies induced by shot trajectories ``W_k``.

    Parameters
    ----------
    k_values : list[float]
        Initial slopes, one policy each.
    params : ModelParams
        Model parameters.
    cfg : SimConfig, optional
        Simulation settings. The default is ``SimConfig(T=None)``.
    n_paths : int, optional
        Number of paths per policy. The default is ``1000``.
    base_seed : int, optional
        Seed shared by all policies. The default is ``cfg.seed``.
    shoot_cfg : ShootConfig, optional
        Integration settings. The default is ``sol.config`` if ``sol``
        is given, ``ShootConfig()`` otherwise.
    sol : HjbSolution, optional
        Solved value function, reported as ``q_of_r0``. Solved on demand
        if ``include_k_star`` is set.
    include_k_star : bool, optional
        Append the ``k*`` policy to the comparison if absent from
        ``k_values``. The default is ``False``.

    Returns
    -------
    list[EvalReport]
        One report per slope, in input order (``k*`` last if appended).

    Raises
    ------
    SolverError
        If a slope yields a trajectory that blows up.

    """
    cfg = cfg or SimConfig(T=None)
    if shoot_cfg is None:
        shoot_cfg = sol.config if sol is not None else ShootConfig()
    if include_k_star and sol is None:
        sol = shoot_kstar(params, shoot_cfg, r0=cfg.r0)

    k_values = [float(k) for k in k_values]
    labels = [f"k={k:g}" for k in k_values]
    if include_k_star and sol.k_star not in k_values:
        k_values.append(sol.k_star)
        labels.append("k*")

    policies = []
    for k, label in zip(k_values, labels):
        if sol is not None and k == sol.k_star:
            traj = sol.trajectory
            label = "k*"
        else:
            traj = integrate_W(k, params, shoot_cfg)
        policies.append(policy_from_trajectory(traj, params, label=label))

    reports = evaluate_policies(policies, params, cfg, n_paths, base_seed, **kwargs)
    if sol is not None:
        for report in reports:
            report.q_of_r0 = float(sol.Q(cfg.r0))
    return reports


def paired_difference(a: EvalReport, b: EvalReport) -> tuple[float, float]:
    """
    Mean and standard error of ``J_a - J_b`` over paired paths.

    Raises
    ------
    ValueError
        If the reports were not produced on common random numbers.

    """
    if a.samples is None or b.samples is None:
        raise ValueError("paired_difference requires per-path samples")
    if a.n_paths != b.n_paths or a.noise_checksum != b.noise_checksum:
        raise ValueError(
            f"Reports {a.policy_label} and {b.policy_label} are not paired"
            f" (n_paths {a.n_paths} vs {b.n_paths},"
            f" checksum {a.noise_checksum} vs {b.noise_checksum})"
        )
    diff = a.samples - b.samples
    return float(diff.mean()), float(diff.std(ddof=1) / math.sqrt(diff.size))


def verification_inequality(
    policy: Policy,
    params: ModelParams,
    cfg: SimConfig,
    n_paths: int,
    base_seed: int | None,
    sol: HjbSolution,
    disc_allowance: float = 0.02,
    **kwargs,
) -> VerificationResult:
    """
    Statistical check of the upper bound ``J(r0) <= Q(r0)``.

    Passes when ``j_mean <= Q(r0) + 3 j_se + disc_allowance |Q(r0)|``.
    The allowance budgets the bias of the Euler scheme at the boundaries.

    Parameters
    ----------
    policy : Policy
        Admissible policy.
    params : ModelParams
        Model parameters.
    cfg : SimConfig
        Simulation settings.
    n_paths : int
        Number of paths.
    base_seed : int | None
        Noise seed, ``cfg.seed`` if ``None``.
    sol : HjbSolution
        Solved value function.
    disc_allowance : float, optional
        Relative discretization allowance. The default is ``0.02``.

    Returns
    -------
    VerificationResult
        Pass flag, margin and the underlying report.

    """
    report = monte_carlo_J(policy, params, cfg, n_paths, base_seed, **kwargs)
    q = float(sol.Q(cfg.r0))
    report.q_of_r0 = q
    margin = q + 3.0 * report.j_se + disc_allowance * abs(q) - report.j_mean
    logger.info(f"Upper-bound check for {policy.label}: margin={margin:.4g}")
    return VerificationResult(holds=margin >= 0.0, margin=margin, q_of_r0=q, report=report)


def reports_to_frame(reports: list[EvalReport]) -> pd.DataFrame:
    """Tabulate report summaries, one row per report."""
    return pd.DataFrame([report.summary() for report in reports])


@contextmanager
def num_threads(threads: int | None):
    """Temporarily cap the numba thread pool."""
    if threads is None:
        yield
        return
    if threads < 1:
        raise ValueError(f"threads must be positive, got {threads}")
    previous = nb.get_num_threads()
    nb.set_num_threads(min(int(threads), nb.config.NUMBA_NUM_THREADS))
    try:
        yield
    finally:
        nb.set_num_threads(previous)


# %% local utils
def _make_report(policy, j, r_end, pi_max, p_spread, params, horizon):
    n = j.size
    j_mean = float(j.mean())
    j_se = float(j.std(ddof=1) / math.sqrt(n))
    half_width = norm.ppf(0.5 + 0.5 * CONFIDENCE) * j_se
    return EvalReport(
        policy_label=policy.label,
        j_mean=j_mean,
        j_se=j_se,
        n_paths=n,
        ci_low=j_mean - half_width,
        ci_high=j_mean + half_width,
        mean_terminal_r=float(r_end.mean()),
        tail_bound=float(math.exp(-params.alpha * horizon) * pi_max.max() / params.alpha),
        price_spread=float(p_spread.max()),
        samples=j,
    )
