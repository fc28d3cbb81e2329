"""
Policy sub-package.

This sub-package contains the closed-form optimizers of the HJB
Hamiltonian, a brute-force lattice oracle for them, and the feedback
policies evaluated by the simulator.

"""

__all__ = []

from ._hamiltonian import P_MIN  # noqa
from ._hamiltonian import optimal_price  # noqa
from ._hamiltonian import optimal_investment  # noqa
from ._hamiltonian import hamiltonian  # noqa
from ._hamiltonian import argmax_hamiltonian_bruteforce  # noqa

from ._policy import PolicyKind, Policy  # noqa
from ._policy import make_policy  # noqa
from ._policy import policy_from_trajectory  # noqa
from ._policy import zero_policy, fixed_policy  # noqa

__all__.extend(["P_MIN", "optimal_price", "optimal_investment"])
__all__.extend(["hamiltonian", "argmax_hamiltonian_bruteforce"])
__all__.extend(["PolicyKind", "Policy", "make_policy", "policy_from_trajectory"])
__all__.extend(["zero_policy", "fixed_policy"])
