"""
Bounds module for primew.

Contains the bound formulas, their registry and the sieve-backed checks.
"""

from .functions import (
    Band,
    band_lower,
    band_upper,
    log_convexity_gap,
    log_power_gap,
    pi_log_lower,
    pi_log_upper,
    pi_lower_linear,
    pi_lower_power,
    pi_upper,
    pn_band,
    pn_linear_upper,
    pn_log_lower,
    pn_loglog_upper,
    pn_lower,
    pn_power_upper,
    pn_upper,
)
from .inverse import forward, u_lower, u_of
from .registry import BoundRegistry, RegisteredBound, registry
from .spec import BoundFamily, BoundSpec, Direction, Target, ValidityReport, Violation
from .verify import find_crossover, find_threshold, verify_range

__all__ = [
    "Band",
    "BoundFamily",
    "BoundRegistry",
    "BoundSpec",
    "Direction",
    "RegisteredBound",
    "Target",
    "ValidityReport",
    "Violation",
    "band_lower",
    "band_upper",
    "find_crossover",
    "find_threshold",
    "forward",
    "log_convexity_gap",
    "log_power_gap",
    "pi_log_lower",
    "pi_log_upper",
    "pi_lower_linear",
    "pi_lower_power",
    "pi_upper",
    "pn_band",
    "pn_linear_upper",
    "pn_log_lower",
    "pn_loglog_upper",
    "pn_lower",
    "pn_power_upper",
    "pn_upper",
    "registry",
    "u_lower",
    "u_of",
    "verify_range",
]
