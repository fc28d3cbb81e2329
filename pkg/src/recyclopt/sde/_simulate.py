"""Path simulators of the recycling-rate process."""

__all__ = [
    "simulate_path",
    "simulate_unregulated",
    "simulate_many",
    "unregulated_config",
]

import logging

from dataclasses import replace

import numpy as np

from .._exceptions import ValidationError
from ..model import ModelParams, validate
from ..model._kernels import pack
from ..policy import Policy, fixed_policy
from ._config import RegulatedPath, SimConfig
from ._kernels import simulate_kernel
from ._rng import standard_normals

logger = logging.getLogger(__name__)


def simulate_path(
    policy: Policy, params: ModelParams, cfg: SimConfig, path_index: int = 0
) -> RegulatedPath:
    """
    Simulate the regulated state under a feedback policy.

    Each step proposes ``r + R(u, r) dt + sigma sqrt(dt) xi`` and projects
    it onto ``[0, 1]``, recording the projection magnitude below ``0`` as a
    lower local-time increment and above ``1`` as an upper one.

    Parameters
    ----------
    policy : Policy
        Feedback policy, evaluated at the left endpoint of each step.
    params : ModelParams
        Model parameters.
    cfg : SimConfig
        Simulation settings. If ``cfg.regulated`` is ``False``, projection
        is skipped and the local times stay at zero.
    path_index : int, optional
        Index of the noise stream under ``cfg.seed``. Path ``i`` of a
        Monte Carlo run with ``base_seed = cfg.seed`` sees the same noise.
        The default is ``0``.

    Returns
    -------
    RegulatedPath
        Simulated series; ``j_realized`` is left unset.

    """
    validate(params)
    n_steps = cfg.n_steps(params)
    xi = standard_normals(cfg.seed, path_index, n_steps)
    rs, Ls, Us, us, ps, dws = simulate_kernel(
        float(cfg.r0),
        float(cfg.dt),
        xi,
        bool(cfg.regulated),
        *policy.kernel_args(),
        pack(params),
    )
    return RegulatedPath(
        ts=np.arange(n_steps + 1) * cfg.dt,
        rs=rs,
        Ls=Ls,
        Us=Us,
        us=us,
        ps=ps,
        dWs=dws,
        regulated=cfg.regulated,
    )


def simulate_unregulated(
    params: ModelParams, cfg: SimConfig, u: float, p: float, path_index: int = 0
) -> RegulatedPath:
    """
    Simulate the free (unreflected) state under constant controls.

    The stored state is not constrained to ``[0, 1]``; drift is evaluated at
    the state clamped into ``[0, 1]`` so that fractional powers stay real.

    Raises
    ------
    ValidationError
        If ``cfg.regulated`` is ``True``.

    """
    if cfg.regulated:
        raise ValidationError("simulate_unregulated requires regulated=False")
    return simulate_path(fixed_policy(u, p, params), params, cfg, path_index)


def simulate_many(
    policy: Policy, params: ModelParams, cfg: SimConfig, n_paths: int
) -> list[RegulatedPath]:
    """
    Simulate paths ``0, ..., n_paths - 1`` of the noise streams under ``cfg.seed``.

    """
    if n_paths < 1:
        raise ValueError(f"n_paths must be positive, got {n_paths}")
    logger.debug(f"Simulating {n_paths} paths of {cfg.n_steps(params)} steps")
    return [simulate_path(policy, params, cfg, index) for index in range(n_paths)]


def unregulated_config(cfg: SimConfig) -> SimConfig:
    """Copy of ``cfg`` with reflection switched off."""
    return replace(cfg, regulated=False)
