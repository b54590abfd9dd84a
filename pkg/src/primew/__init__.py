"""
primew: Lambert W branches and the prime bounds built on them.

This __init__.py file exposes the main entry points, allowing for
clean and direct imports.

Example:
    from primew import w0, build_table, verify_range, BoundSpec
"""

__version__ = "0.1.0"

from .bounds import BoundFamily, BoundSpec, ValidityReport, find_crossover, find_threshold, u_of, verify_range
from .config import DEFAULTS, Settings
from .errors import (
    AmbiguityError,
    BracketError,
    ConvergenceError,
    DomainError,
    PrimewError,
    RangeError,
    ResourceError,
)
from .lambert import Branch, WResult, asymptotic_estimate, lambertw, solve_log_linear, w0, wm1
from .primes import PrimeTable, build_table

__all__ = [
    "DEFAULTS",
    "AmbiguityError",
    "BoundFamily",
    "BoundSpec",
    "BracketError",
    "Branch",
    "ConvergenceError",
    "DomainError",
    "PrimeTable",
    "PrimewError",
    "RangeError",
    "ResourceError",
    "Settings",
    "ValidityReport",
    "WResult",
    "asymptotic_estimate",
    "build_table",
    "find_crossover",
    "find_threshold",
    "lambertw",
    "solve_log_linear",
    "u_of",
    "verify_range",
    "w0",
    "wm1",
]
