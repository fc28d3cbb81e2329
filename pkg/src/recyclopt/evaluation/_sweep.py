"""Parameter sensitivity sweeps."""

__all__ = ["SWEEPABLE", "sensitivity_sweep"]

import logging
import math

import pandas as pd

from .._exceptions import RecycloptError
from ..hjb import ShootConfig, shoot_kstar
from ..model import ModelParams, validate
from ..policy import make_policy
from ..sde import SimConfig
from ._monte_carlo import monte_carlo_J

logger = logging.getLogger(__name__)

SWEEPABLE = (
    "gamma",
    "delta",
    "sigma2",
    "alpha",
    "a0",
    "a1",
    "a2",
    "c_v",
    "p0",
    "C_L",
)

COLUMNS = [
    "k_star",
    "q_of_r0",
    "j_mean",
    "j_se",
    "mean_terminal_r",
    "price_spread",
    "residual_sup",
    "error",
]


def sensitivity_sweep(
    param_name: str,
    values: list[float],
    base_params: ModelParams,
    cfg: SimConfig,
    n_paths: int,
    base_seed: int | None = None,
    shoot_cfg: ShootConfig | None = None,
    **kwargs,
) -> pd.DataFrame:
    """
    Re-solve and re-evaluate the optimal policy over a range of one parameter.

    Parameters
    ----------
    param_name : str
        Swept parameter, one of ``gamma, delta, sigma2, alpha, a0, a1, a2,
        c_v, p0, C_L``.
    values : list[float]
        Parameter values, one row each.
    base_params : ModelParams
        Values of the remaining parameters.
    cfg : SimConfig
        Simulation settings.
    n_paths : int
        Number of paths per row.
    base_seed : int, optional
        Seed shared by every row. The default is ``cfg.seed``.
    shoot_cfg : ShootConfig, optional
        Solver settings. The default is ``ShootConfig()``.

    Returns
    -------
    pd.DataFrame
        One row per value with columns ``param_name, k_star, q_of_r0, j_mean,
        j_se, mean_terminal_r, price_spread, residual_sup, error``. Rows whose
        solve or evaluation failed hold ``NaN`` values and the error message.

    """
    if param_name not in SWEEPABLE:
        raise ValueError(
            f"Unrecognized sweep parameter: {param_name} - must be one of {SWEEPABLE}"
        )
    rows = []
    for value in values:
        row = {param_name: float(value)}
        row.update({name: math.nan for name in COLUMNS})
        row["error"] = ""
        try:
            params = validate(base_params.replace(**{param_name: float(value)}))
            sol = shoot_kstar(params, shoot_cfg, r0=cfg.r0)
            report = monte_carlo_J(
                make_policy(sol, params), params, cfg, n_paths, base_seed, **kwargs
            )
            row.update(
                k_star=sol.k_star,
                q_of_r0=float(sol.Q(cfg.r0)),
                j_mean=report.j_mean,
                j_se=report.j_se,
                mean_terminal_r=report.mean_terminal_r,
                price_spread=report.price_spread,
                residual_sup=sol.residual_sup,
            )
        except (RecycloptError, ValueError) as err:
            logger.warning(f"Sweep row {param_name}={value} failed: {err}")
            row["error"] = f"{type(err).__name__}: {err}"
        rows.append(row)
    return pd.DataFrame(rows, columns=[param_name] + COLUMNS)
