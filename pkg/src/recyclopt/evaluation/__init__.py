"""
Evaluation sub-package.

This sub-package contains the Monte Carlo estimator of the discounted
profit functional, paired policy comparisons on common random numbers,
the statistical upper-bound check against the solved value function and
parameter sensitivity sweeps.

"""

__all__ = []

from ._monte_carlo import EvalReport, VerificationResult  # noqa
from ._monte_carlo import discounted_profit  # noqa
from ._monte_carlo import monte_carlo_J, evaluate_policies  # noqa
from ._monte_carlo import compare_policies, paired_difference  # noqa
from ._monte_carlo import verification_inequality  # noqa
from ._monte_carlo import reports_to_frame, num_threads  # noqa

from ._sweep import SWEEPABLE, sensitivity_sweep  # noqa

__all__.extend(["EvalReport", "VerificationResult", "discounted_profit"])
__all__.extend(["monte_carlo_J", "evaluate_policies"])
__all__.extend(["compare_policies", "paired_difference", "verification_inequality"])
__all__.extend(["reports_to_frame", "num_threads"])
__all__.extend(["SWEEPABLE", "sensitivity_sweep"])
