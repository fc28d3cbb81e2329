"""
SDE sub-package.

This sub-package contains the projected Euler-Maruyama simulator of the
regulated recycling-rate process, with explicit local-time bookkeeping,
and the counter-based per-path noise streams shared with the Monte Carlo
evaluator.

"""

__all__ = []

from ._config import SimConfig, RegulatedPath  # noqa
from ._rng import path_stream, standard_normals, noise_block  # noqa
from ._simulate import simulate_path  # noqa
from ._simulate import simulate_unregulated, unregulated_config  # noqa
from ._simulate import simulate_many  # noqa

__all__.extend(["SimConfig", "RegulatedPath"])
__all__.extend(["path_stream", "standard_normals", "noise_block"])
__all__.extend(["simulate_path", "simulate_unregulated", "unregulated_config"])
__all__.append("simulate_many")
