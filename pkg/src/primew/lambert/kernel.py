"""
Real branches of the Lambert W function.

W(x) is the inverse of w -> w e^w. Two branches are real: the principal branch
W0 on [-1/e, inf) with W0 >= -1, and W-1 on [-1/e, 0) with W-1 <= -1. Both meet
at the branch point x = -1/e where they equal -1.

Values come from Halley's method on f(w) = w e^w - x, seeded with the
branch-point series near -1/e and the logarithmic asymptotics elsewhere. One
array kernel serves scalars and arrays alike, so a sweep over 10^7 arguments
and a single `w0(x)` call agree to rounding for the same input.
"""

import logging
import math
from dataclasses import dataclass
from enum import Enum

import numpy as np
from numpy.typing import ArrayLike

from ..config import DEFAULTS
from ..errors import ConvergenceError, DomainError

log = logging.getLogger(__name__)

INV_E = math.exp(-1.0)
BRANCH_POINT = -INV_E

CLAMP_TOL = 1e-15  # arguments this far below -1/e are treated as -1/e
BRANCH_SNAP = 1e-12  # within this distance of -1/e the value is -1
RESIDUAL_TOL = 1e-12  # certification bound, relative to max(1, |x|)
STOP_RESIDUAL = 1e-14  # relative to |x|
STEP_TOL = 4.0 * np.finfo(np.float64).eps


class Branch(Enum):
    """Real branch selector."""

    PRINCIPAL = 0
    MINUS_ONE = -1

    @classmethod
    def parse(cls, value: "Branch | int | str") -> "Branch":
        """Accept a Branch, its index (0 / -1) or a name like 'principal' / 'minus-one'."""
        if isinstance(value, Branch):
            return value
        text = str(value).strip().lower().replace("_", "-")
        aliases = {
            "0": cls.PRINCIPAL,
            "principal": cls.PRINCIPAL,
            "w0": cls.PRINCIPAL,
            "-1": cls.MINUS_ONE,
            "minus-one": cls.MINUS_ONE,
            "wm1": cls.MINUS_ONE,
        }
        if text not in aliases:
            raise DomainError(f"unknown branch {value!r}; expected 0 or -1")
        return aliases[text]

    def contains(self, x: ArrayLike) -> np.ndarray:
        """Elementwise domain test, after the -1/e clamp."""
        x = _clamp(np.asarray(x, dtype=np.float64))
        if self is Branch.PRINCIPAL:
            return np.isfinite(x) & (x >= BRANCH_POINT)
        return (x >= BRANCH_POINT) & (x < 0.0)

    @property
    def label(self) -> str:
        return "W0" if self is Branch.PRINCIPAL else "W-1"


@dataclass(frozen=True)
class WResult:
    """One evaluated W value together with its residual certificate."""

    branch: Branch
    x: float
    value: float
    residual: float  # value * e^value - x
    iterations: int

    @property
    def certified(self) -> bool:
        return abs(self.residual) <= RESIDUAL_TOL * max(1.0, abs(self.x))


def _clamp(x: np.ndarray) -> np.ndarray:
    near = (x < BRANCH_POINT) & (x >= BRANCH_POINT - CLAMP_TOL)
    if near.any():
        x = np.where(near, BRANCH_POINT, x)
    return x


def _initial_guess(x: np.ndarray, branch: Branch) -> np.ndarray:
    with np.errstate(over="ignore", invalid="ignore", divide="ignore"):
        p = np.sqrt(np.maximum(2.0 * (math.e * x + 1.0), 0.0))
        near_branch_point = x < -0.25
        if branch is Branch.PRINCIPAL:
            series = -1.0 + p - p * p / 3.0 + (11.0 / 72.0) * p**3
            l1 = np.log(np.maximum(x, math.e))
            asymptotic = l1 - np.log(l1)
            moderate = np.log1p(np.maximum(x, -0.25))
            guess = np.where(x >= math.e, asymptotic, moderate)
        else:
            series = -1.0 - p - p * p / 3.0 - (11.0 / 72.0) * p**3
            l1 = np.log(-np.minimum(x, -1e-300))
            guess = l1 - np.log(-l1)
        return np.where(near_branch_point, series, guess)


def _halley_step(w: np.ndarray, x: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Return (f(w), Halley correction) for f(w) = w e^w - x."""
    ew = np.exp(w)
    f = w * ew - x
    wp1 = w + 1.0
    wp1 = np.where(wp1 == 0.0, np.finfo(np.float64).tiny, wp1)
    return f, f / (ew * wp1 - (w + 2.0) * f / (2.0 * wp1))


def _solve(
    x: np.ndarray, branch: Branch, max_iterations: int
) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """
    Run the kernel over a flat float64 array.

    Returns:
        (values, iteration counts, validity mask); invalid entries hold NaN.
    """
    x = _clamp(x)
    valid = branch.contains(x)
    w = np.full(x.shape, np.nan)
    iterations = np.zeros(x.shape, dtype=np.int64)

    snapped = valid & (np.abs(x - BRANCH_POINT) < BRANCH_SNAP)
    w[snapped] = -1.0
    active = valid & ~snapped
    w[active] = _initial_guess(x[active], branch)

    with np.errstate(over="ignore", invalid="ignore", divide="ignore"):
        for _ in range(max_iterations):
            idx = np.flatnonzero(active)
            if idx.size == 0:
                break
            xi, wi = x[idx], w[idx]
            f, step = _halley_step(wi, xi)
            settled = np.abs(f) <= STOP_RESIDUAL * np.abs(xi)
            moving = ~settled
            wn = np.where(settled, wi, wi - step)
            w[idx] = wn
            iterations[idx] += moving
            small_step = np.abs(step) <= STEP_TOL * np.abs(wn)
            active[idx] = moving & ~small_step

    if active.any():
        bad = x[np.flatnonzero(active)[0]]
        raise ConvergenceError(f"{branch.label}({bad!r}) did not converge in {max_iterations} iterations")
    if branch is Branch.PRINCIPAL:
        w[valid] = np.maximum(w[valid], -1.0)
    else:
        w[valid] = np.minimum(w[valid], -1.0)
    return w, iterations, valid


def _check_domain(x: np.ndarray, valid: np.ndarray, branch: Branch) -> None:
    if not valid.all():
        bad = float(x[np.flatnonzero(~valid)[0]])
        domain = "[-1/e, inf)" if branch is Branch.PRINCIPAL else "[-1/e, 0)"
        raise DomainError(f"{branch.label} is defined on {domain}, got x = {bad!r}", bad)


def lambertw(
    x: ArrayLike,
    branch: Branch | int | str = Branch.PRINCIPAL,
    *,
    strict: bool = True,
    max_iterations: int = DEFAULTS.max_iterations,
) -> np.ndarray | float:
    """
    Evaluate one real branch elementwise.

    Args:
        x: scalar or array of arguments
        branch: which real branch
        strict: raise DomainError on any out-of-domain entry; when False
            those entries come back as NaN

    Returns:
        A float for scalar input, otherwise an array shaped like `x`.
    """
    branch = Branch.parse(branch)
    arr = np.asarray(x, dtype=np.float64)
    flat = np.atleast_1d(arr).ravel()
    w, _, valid = _solve(flat, branch, max_iterations)
    if strict:
        _check_domain(flat, valid, branch)
    if arr.ndim == 0:
        return float(w[0])
    return w.reshape(arr.shape)


def evaluate(x: float, branch: Branch | int | str) -> WResult:
    """Evaluate one branch at a single point and certify the result."""
    branch = Branch.parse(branch)
    flat = np.array([x], dtype=np.float64)
    w, iterations, valid = _solve(flat, branch, DEFAULTS.max_iterations)
    _check_domain(flat, valid, branch)
    value = float(w[0])
    xc = float(_clamp(flat)[0])
    residual = value * math.exp(value) - xc
    result = WResult(branch, xc, value, residual, int(iterations[0]))
    log.debug("%s(%r) = %r after %d iterations", branch.label, x, value, result.iterations)
    return result


def w0(x: float) -> WResult:
    """Principal branch at `x`, for x >= -1/e."""
    return evaluate(x, Branch.PRINCIPAL)


def wm1(x: float) -> WResult:
    """Lower branch at `x`, for -1/e <= x < 0."""
    return evaluate(x, Branch.MINUS_ONE)


def halley_trace(x: float, branch: Branch | int | str) -> list[float]:
    """The Halley iterates for a single argument, starting from the initial guess."""
    branch = Branch.parse(branch)
    flat = _clamp(np.array([x], dtype=np.float64))
    _check_domain(flat, branch.contains(flat), branch)
    if abs(flat[0] - BRANCH_POINT) < BRANCH_SNAP:
        return [-1.0]
    w = _initial_guess(flat, branch)
    trace = [float(w[0])]
    with np.errstate(over="ignore", invalid="ignore"):
        for _ in range(DEFAULTS.max_iterations):
            f, step = _halley_step(w, flat)
            if abs(f[0]) <= STOP_RESIDUAL * abs(flat[0]):
                break
            w = w - step
            trace.append(float(w[0]))
            if abs(step[0]) <= STEP_TOL * abs(w[0]):
                break
    return trace
