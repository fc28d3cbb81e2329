"""
HJB sub-package.

This sub-package contains the shooting solver for the value function:
fixed-step integration of the parameterized initial-value problem,
trajectory classification, bisection on the initial slope and
residual diagnostics of the resulting solution.

"""

__all__ = []

from ._shooting import ShootConfig  # noqa
from ._shooting import ProfileKind, Classification  # noqa
from ._shooting import WTrajectory, HjbSolution  # noqa
from ._shooting import integrate_W  # noqa
from ._shooting import integration_constant  # noqa
from ._shooting import classify  # noqa
from ._shooting import shoot_kstar  # noqa
from ._shooting import scan_trajectories  # noqa

from ._residual import hjb_operator  # noqa
from ._residual import residual_profile  # noqa
from ._residual import hjb_residual  # noqa
from ._residual import second_derivative  # noqa

__all__.extend(["ShootConfig", "ProfileKind", "Classification"])
__all__.extend(["WTrajectory", "HjbSolution"])
__all__.extend(["integrate_W", "integration_constant", "classify"])
__all__.extend(["shoot_kstar", "scan_trajectories"])
__all__.extend(["hjb_operator", "residual_profile", "hjb_residual", "second_derivative"])
