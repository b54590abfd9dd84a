"""
Lambert W module for primew.

Contains the real-branch kernel, its asymptotics and the log-linear identity.
"""

from .asymptotic import asymptotic_estimate
from .identity import LogLinearProblem, solve_log_linear
from .kernel import BRANCH_POINT, Branch, WResult, evaluate, halley_trace, lambertw, w0, wm1

__all__ = [
    "BRANCH_POINT",
    "Branch",
    "LogLinearProblem",
    "WResult",
    "asymptotic_estimate",
    "evaluate",
    "halley_trace",
    "lambertw",
    "solve_log_linear",
    "w0",
    "wm1",
]
