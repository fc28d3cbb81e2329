"""
Model sub-package.

This sub-package contains the model parameters and the primitive
scalar functions of the recycling control problem: drift, demand,
profit, and the extension functions entering the HJB equation.

"""

__all__ = []

from ._params import ModelParams  # noqa
from ._params import validate  # noqa

from ._primitives import drift_R  # noqa
from ._primitives import demand  # noqa
from ._primitives import profit  # noqa
from ._primitives import F, F_prime  # noqa
from ._primitives import G, G_prime  # noqa
from ._primitives import constant_c  # noqa

__all__.extend(["ModelParams", "validate"])
__all__.extend(["drift_R", "demand", "profit"])
__all__.extend(["F", "F_prime", "G", "G_prime", "constant_c"])
