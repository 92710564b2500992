"""Offline baselines: 2-approximation, exact OPT and the density bound."""

from rentmin.offline.bounds import density_lower_bound
from rentmin.offline.brute_force import OptMethod, OptResult, brute_force_opt
from rentmin.offline.two_approx import offline_two_approx

__all__ = [
    "OptMethod",
    "OptResult",
    "brute_force_opt",
    "density_lower_bound",
    "offline_two_approx",
]
