"""Simulation configuration and stored path structures."""

__all__ = ["SimConfig", "RegulatedPath", "DEFAULT_HORIZON_SCALE"]

from dataclasses import asdict as _asdict
from dataclasses import dataclass, field

import numpy as np
import pandas as pd

from .._exceptions import ValidationError
from ..model import ModelParams

# default Monte Carlo horizon in units of 1/alpha (discount factor e^-40)
DEFAULT_HORIZON_SCALE = 40.0


@dataclass(frozen=True)
class SimConfig:
    """
    Euler-Maruyama simulation settings.

    Attributes
    ----------
    r0 : float, optional
        Initial recycling rate in ``[0, 1]``. The default is ``0.5``.
    T : float | None, optional
        Horizon in ``[time]``. If ``None``, use ``40 / alpha``
        (see :meth:`horizon`). The default is ``2.0``.
    dt : float, optional
        Euler step in ``[time]``. The default is ``0.002``.
    seed : int, optional
        Base seed of the per-path noise streams. The default is ``0``.
    regulated : bool, optional
        Toggle reflection at ``{0, 1}``. The default is ``True``.

    """

    r0: float = 0.5
    T: float | None = 2.0
    dt: float = 0.002
    seed: int = 0
    regulated: bool = True

    def __post_init__(self):
        if not 0.0 <= self.r0 <= 1.0:
            raise ValidationError(f"r0 must be in [0, 1], got {self.r0}")
        if not self.dt > 0:
            raise ValidationError(f"dt must be positive, got {self.dt}")
        if self.T is not None and not self.T > 0:
            raise ValidationError(f"T must be positive, got {self.T}")
        if self.T is not None and self.dt > self.T:
            raise ValidationError(f"dt must not exceed T, got dt={self.dt}, T={self.T}")
        if int(self.seed) != self.seed or self.seed < 0:
            raise ValidationError(f"seed must be a non-negative integer, got {self.seed}")

    def horizon(self, params: ModelParams) -> float:
        """Resolved horizon, ``40 / alpha`` when ``T`` is ``None``."""
        if self.T is None:
            return DEFAULT_HORIZON_SCALE / params.alpha
        return float(self.T)

    def n_steps(self, params: ModelParams) -> int:
        """Number of Euler steps covering the resolved horizon."""
        return max(int(round(self.horizon(params) / self.dt)), 1)

    def asdict(self) -> dict:
        return _asdict(self)


@dataclass(eq=False)
class RegulatedPath:
    """
    One simulated trajectory.

    All series have ``n_steps + 1`` entries; controls at index ``i`` are
    applied over ``[t_i, t_{i+1})``, local-time increments of step ``i``
    are ``Ls[i + 1] - Ls[i]``, and ``dWs[i]`` is the Brownian increment
    of step ``i`` (the last entry is ``0``).

    """

    ts: np.ndarray
    rs: np.ndarray
    Ls: np.ndarray
    Us: np.ndarray
    us: np.ndarray
    ps: np.ndarray
    dWs: np.ndarray = field(repr=False)
    regulated: bool = True
    j_realized: float = float("nan")

    def __post_init__(self):
        n = len(self.ts)
        for name in ("rs", "Ls", "Us", "us", "ps", "dWs"):
            if len(getattr(self, name)) != n:
                raise ValueError(
                    f"{name} has {len(getattr(self, name))} entries, expected {n}"
                )

    @property
    def dL(self) -> np.ndarray:
        """Per-step lower local-time increments."""
        return np.diff(self.Ls)

    @property
    def dU(self) -> np.ndarray:
        """Per-step upper local-time increments."""
        return np.diff(self.Us)

    def to_frame(self, path_id: int | None = None) -> pd.DataFrame:
        """Series as a table with columns ``t, r, L, U, u, p``."""
        df = pd.DataFrame(
            {
                "t": self.ts,
                "r": self.rs,
                "L": self.Ls,
                "U": self.Us,
                "u": self.us,
                "p": self.ps,
            }
        )
        if path_id is not None:
            df.insert(0, "path_id", path_id)
        return df
