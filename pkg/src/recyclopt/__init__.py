"""Recyclopt public API."""

__all__ = []

try:
    from ._version import __version__  # noqa
except ImportError:
    __version__ = "unknown"

from . import model  # noqa
from . import hjb  # noqa
from . import policy  # noqa
from . import sde  # noqa
from . import evaluation  # noqa

from ._exceptions import RecycloptError, ConfigError, ValidationError  # noqa
from ._exceptions import SolverError, ConsistencyError  # noqa

from .model import ModelParams  # noqa
from .hjb import ShootConfig, shoot_kstar  # noqa
from .policy import make_policy  # noqa
from .sde import SimConfig, simulate_path  # noqa
from .evaluation import monte_carlo_J  # noqa

__all__.extend(["model", "hjb", "policy", "sde", "evaluation"])
__all__.extend(["RecycloptError", "ConfigError", "ValidationError"])
__all__.extend(["SolverError", "ConsistencyError"])
__all__.extend(["ModelParams", "ShootConfig", "shoot_kstar", "make_policy"])
__all__.extend(["SimConfig", "simulate_path", "monte_carlo_J"])
