"""Model parameter structure."""

__all__ = ["ModelParams", "validate"]

import math

from dataclasses import asdict as _asdict
from dataclasses import dataclass, fields, replace

from .._exceptions import ValidationError


@dataclass(frozen=True)
class ModelParams:
    """
    Economic and dynamic constants of the recycling control problem.

    Defaults reproduce the reference example with ``a1 > 1``
    (``C_L = 0.5``, ``sigma**2 = 2``, ``gamma = 5``, ``a1 = 1.1``,
    ``a2 = 5``, ``delta = 0.5``, ``c_v = 0.2``, ``alpha = 0.25``).
    Market potential ``a0`` defaults to ``10``, the scale at which the
    optimal slope ``k*`` lies strictly between ``-0.5`` and ``0.5`` and
    ``W_{k*}`` has its hump shape. Price cap ``p0`` defaults to ``1``.

    Attributes
    ----------
    gamma : float
        Recycling-investment efficiency exponent. Must be ``> 1``.
    delta : float
        Proportional decay rate of the recycling rate.
    sigma : float
        Diffusion volatility (``sigma**2`` is the variance rate).
    alpha : float
        Discount rate in ``[1/time]``.
    a0 : float
        Market potential.
    a1 : float
        Price sensitivity exponent of demand.
    a2 : float
        Greenness sensitivity exponent of demand.
    c_v : float
        Unit cost of virgin resources.
    p0 : float
        Price cap, binding when ``a1 <= 1``.
    C_L : float
        Penalty per unit of local time at the lower boundary.

    """

    gamma: float = 5.0
    delta: float = 0.5
    sigma: float = math.sqrt(2.0)
    alpha: float = 0.25
    a0: float = 10.0
    a1: float = 1.1
    a2: float = 5.0
    c_v: float = 0.2
    p0: float = 1.0
    C_L: float = 0.5

    @property
    def sigma2(self) -> float:
        """Variance rate ``sigma**2``."""
        return self.sigma**2

    @property
    def price_capped(self) -> bool:
        """``True`` in the ``a1 <= 1`` regime, where the optimal price is ``p0``."""
        return self.a1 <= 1.0

    def asdict(self) -> dict:
        """Return parameters as a plain dictionary."""
        return _asdict(self)

    def replace(self, **changes) -> "ModelParams":
        """
        Return a copy with some fields replaced.

        ``sigma2`` is accepted as an alias that sets ``sigma = sqrt(sigma2)``.
        """
        if "sigma2" in changes:
            sigma2 = float(changes.pop("sigma2"))
            if sigma2 < 0:
                raise ValidationError(f"sigma2 must be non-negative, got {sigma2}")
            changes["sigma"] = math.sqrt(sigma2)
        return replace(self, **changes)

    @classmethod
    def from_dict(cls, data: dict) -> "ModelParams":
        """
        Build parameters from a dictionary, ignoring keys of other structures.

        ``sigma2`` is accepted in place of ``sigma``.
        """
        names = {f.name for f in fields(cls)}
        kwargs = {key: float(value) for key, value in data.items() if key in names}
        params = cls(**kwargs)
        if "sigma2" in data:
            params = params.replace(sigma2=data["sigma2"])
        return params


def validate(params: ModelParams) -> ModelParams:
    """
    Check model assumptions.

    Parameters
    ----------
    params : ModelParams
        Candidate parameters.

    Returns
    -------
    ModelParams
        The input, unchanged.

    Raises
    ------
    ValidationError
        If any assumption is violated. The message names the violated invariant.

    """
    for name in ("gamma", "delta", "sigma", "alpha", "a0", "a1", "a2", "c_v"):
        value = getattr(params, name)
        if not math.isfinite(value):
            raise ValidationError(f"{name} must be finite, got {value}")
    if params.gamma <= 1:
        raise ValidationError(f"gamma must exceed 1, got {params.gamma}")
    if params.delta <= 0:
        raise ValidationError(f"delta must be positive, got {params.delta}")
    if params.alpha <= 0:
        raise ValidationError(f"alpha must be positive, got {params.alpha}")
    if params.sigma < 0:
        raise ValidationError(f"sigma must be non-negative, got {params.sigma}")
    for name in ("a0", "a1", "a2", "c_v", "p0", "C_L"):
        value = getattr(params, name)
        if not value > 0:
            raise ValidationError(f"{name} must be positive, got {value}")
    if params.a1 <= 1 and params.p0 < params.c_v:
        raise ValidationError(
            f"p0 must be ≥ c_v when a1 ≤ 1, got p0={params.p0}, c_v={params.c_v}"
        )
    return params
