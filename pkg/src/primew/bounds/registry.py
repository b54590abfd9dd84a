"""
Bound registry for primew.

This module maps every stable bound id to the pieces a sweep needs: what the
bound is compared against, in which direction, how to evaluate it over an
array of arguments and which of those arguments lie in its domain.
"""

import math
from dataclasses import dataclass
from typing import Callable, Dict

import numpy as np

from . import functions as fn
from .inverse import u_lower
from .spec import BoundFamily, BoundSpec, Direction, Target

Evaluator = Callable[[np.ndarray, BoundSpec], np.ndarray]
DomainTest = Callable[[np.ndarray, BoundSpec], np.ndarray]


def _everywhere(args: np.ndarray, spec: BoundSpec) -> np.ndarray:
    return np.isfinite(args)


def _indices(args: np.ndarray, spec: BoundSpec) -> np.ndarray:
    return np.isfinite(args) & (args >= 1)


@dataclass(frozen=True)
class RegisteredBound:
    family: BoundFamily
    target: Target
    direction: Direction
    evaluate: Evaluator
    domain: DomainTest
    claimed_from: int | None = None
    summary: str = ""
    undefined_fails: bool = False  # out-of-domain arguments count as violations, not skips

    def first_valid(self, spec: BoundSpec, search_to: int = 10**6) -> int:
        """Smallest integer argument inside the domain (0 for pi bounds, 1 for p_n bounds at least)."""
        start = 0 if self.target is Target.PI else 1
        step = 1024
        for lo in range(start, search_to + 1, step):
            args = np.arange(lo, min(lo + step, search_to + 1), dtype=np.float64)
            inside = np.flatnonzero(self.domain(args, spec))
            if inside.size:
                return int(args[inside[0]])
        raise ValueError(f"{spec.label} has no in-domain argument up to {search_to}")


class BoundRegistry:
    """
    Keeps RegisteredBound entries by id.
    """

    def __init__(self):
        self._bounds: Dict[str, RegisteredBound] = {}

    def register(self, bound: RegisteredBound):
        """Register a bound under its family id."""
        self._bounds[bound.family.value] = bound

    def get(self, family: BoundFamily | str) -> RegisteredBound:
        """Get a bound by family or id."""
        return self._bounds[BoundFamily.parse(family).value]

    def ids(self) -> list[str]:
        return sorted(self._bounds)

    def __contains__(self, family: BoundFamily | str) -> bool:
        return BoundFamily.parse(family).value in self._bounds


registry = BoundRegistry()

for _bound in (
    RegisteredBound(
        BoundFamily.PI_UPPER_W,
        Target.PI,
        Direction.UPPER,
        lambda x, s: fn.pi_upper(x),
        lambda x, s: fn.pi_upper_domain(x),
        0,
        "pi(x) < x/W0(x)",
    ),
    RegisteredBound(
        BoundFamily.PI_LOWER_POWER,
        Target.PI,
        Direction.LOWER,
        lambda x, s: fn.pi_lower_power(x, s.epsilon),
        lambda x, s: fn.pi_lower_power_domain(x),
        11,
        "pi(x) > (x/(1+eps)) / W0((x/(1+eps)) (eps e)^(-1/(1+eps))) - 1",
    ),
    RegisteredBound(
        BoundFamily.PI_LOWER_LINEAR,
        Target.PI,
        Direction.LOWER,
        lambda x, s: fn.pi_lower_linear(x, s.linear_coeff),
        lambda x, s: fn.pi_lower_linear_domain(x),
        None,
        "pi(x) > (x/(1+c)) / W0(x/(1+c)) - 1",
    ),
    RegisteredBound(
        BoundFamily.PN_UPPER,
        Target.PN,
        Direction.UPPER,
        lambda n, s: fn.pn_upper(n, s.shift),
        lambda n, s: fn.pn_upper_domain(n, s.shift),
        4,
        "p_n < -n W-1(-1/(n+shift))",
        undefined_fails=True,
    ),
    RegisteredBound(
        BoundFamily.PN_LOWER,
        Target.PN,
        Direction.LOWER,
        lambda n, s: fn.pn_lower(n),
        lambda n, s: fn.pn_lower_domain(n),
        14,
        "p_n > -(n-1) W-1(-e^(3/2)/(n-1))",
    ),
    RegisteredBound(
        BoundFamily.PN_BAND_UPPER,
        Target.PN,
        Direction.UPPER,
        lambda n, s: fn.band_upper(n, s.epsilon),
        lambda n, s: fn.band_upper_domain(n, s.epsilon),
        None,
        "p_n < -n W-1(-e^(1-eps)/n)",
    ),
    RegisteredBound(
        BoundFamily.PN_BAND_LOWER,
        Target.PN,
        Direction.LOWER,
        lambda n, s: fn.band_lower(n, s.epsilon),
        lambda n, s: fn.band_lower_domain(n, s.epsilon),
        None,
        "p_n > -(n-1) W-1(-e^(1+eps)/(n-1))",
    ),
    RegisteredBound(
        BoundFamily.U_INVERSE,
        Target.PI,
        Direction.LOWER,
        lambda x, s: u_lower(x),
        _everywhere,
        11,
        "pi(x) > U(x) - 1, U(x) ln(U(x) ln U(x)) = x",
    ),
    RegisteredBound(
        BoundFamily.PN_LOG_LOWER,
        Target.PN,
        Direction.LOWER,
        lambda n, s: fn.pn_log_lower(n),
        _indices,
        1,
        "p_n > n ln n",
    ),
    RegisteredBound(
        BoundFamily.PN_LOGLOG_UPPER,
        Target.PN,
        Direction.UPPER,
        lambda n, s: fn.pn_loglog_upper(n),
        lambda n, s: fn.pn_loglog_upper_domain(n),
        6,
        "p_n < n ln(n ln n)",
    ),
    RegisteredBound(
        BoundFamily.PN_POWER_UPPER,
        Target.PN,
        Direction.UPPER,
        lambda n, s: fn.pn_power_upper(n, s.epsilon),
        _indices,
        6,
        "p_n < n {(1+eps) ln n - 1 - ln eps}",
    ),
    RegisteredBound(
        BoundFamily.PN_LINEAR_UPPER,
        Target.PN,
        Direction.UPPER,
        lambda n, s: fn.pn_linear_upper(n, s.linear_coeff),
        _indices,
        None,
        "p_n < (1+c) n ln n",
    ),
    RegisteredBound(
        BoundFamily.PI_LOG_LOWER,
        Target.PI,
        Direction.LOWER,
        lambda x, s: fn.pi_log_lower(x),
        lambda x, s: fn.pi_log_lower_domain(x),
        17,
        "pi(x) > x/ln x",
    ),
    RegisteredBound(
        BoundFamily.PI_LOG_UPPER,
        Target.PI,
        Direction.UPPER,
        lambda x, s: fn.pi_log_upper(x),
        lambda x, s: fn.pi_log_upper_domain(x),
        math.ceil(math.exp(1.5)),
        "pi(x) < x/(ln x - 3/2)",
    ),
):
    registry.register(_bound)
