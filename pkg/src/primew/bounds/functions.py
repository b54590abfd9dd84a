"""
Explicit bounds on pi(x) and p_n.

Every function accepts a scalar or an array and answers in kind. Scalars that
fall outside a bound's domain raise DomainError; the `*_domain` companions
give the elementwise domain masks that sweeps use to skip such arguments.

The pi bounds are written in the e^W form, x / W(x) = e^W(x), which is finite
at x = 0 and needs no special case there.
"""

import math
from dataclasses import dataclass

import numpy as np
from numpy.typing import ArrayLike

from ..errors import DomainError
from ..lambert.kernel import Branch, lambertw


def _prepare(x: ArrayLike) -> tuple[np.ndarray, tuple[int, ...]]:
    arr = np.asarray(x, dtype=np.float64)
    return np.atleast_1d(arr).ravel(), arr.shape


def _finish(values: np.ndarray, shape: tuple[int, ...]) -> np.ndarray | float:
    if shape == ():
        return float(values[0])
    return values.reshape(shape)


def _require(mask: np.ndarray, args: np.ndarray, what: str) -> None:
    if not mask.all():
        bad = float(args[np.flatnonzero(~mask)[0]])
        raise DomainError(f"{what} is undefined at {bad!r}", bad)


def _positive(name: str, value: float) -> None:
    if not value > 0:
        raise DomainError(f"{name} must be positive, got {value!r}", value)


# --- pi(x) from above -------------------------------------------------------


def pi_upper_domain(x: np.ndarray) -> np.ndarray:
    return np.isfinite(x) & (x >= 0)


def pi_upper(x: ArrayLike) -> np.ndarray | float:
    """x / W0(x) = e^W0(x), a strict upper bound on pi(x) for all x >= 0."""
    args, shape = _prepare(x)
    _require(pi_upper_domain(args), args, "pi_upper")
    return _finish(np.exp(lambertw(args, Branch.PRINCIPAL)), shape)


# --- pi(x) from below -------------------------------------------------------


def pi_lower_power_domain(x: np.ndarray) -> np.ndarray:
    return np.isfinite(x) & (x >= 0)


def pi_lower_power(x: ArrayLike, eps: float) -> np.ndarray | float:
    """
    (x/(1+eps)) / W(k x/(1+eps)) - 1 with k = (eps e)^(-1/(1+eps)).

    Evaluated as e^W(k z)/k - 1, which at x = 0 gives the limit
    (eps e)^(1/(1+eps)) - 1.
    """
    _positive("eps", eps)
    args, shape = _prepare(x)
    _require(pi_lower_power_domain(args), args, "pi_lower_power")
    k = (eps * math.e) ** (-1.0 / (1.0 + eps))
    z = args / (1.0 + eps)
    return _finish(np.exp(lambertw(z * k, Branch.PRINCIPAL)) / k - 1.0, shape)


def pi_lower_linear_domain(x: np.ndarray) -> np.ndarray:
    return np.isfinite(x) & (x > 0)


def pi_lower_linear(x: ArrayLike, c: float) -> np.ndarray | float:
    """(x/(1+c)) / W(x/(1+c)) - 1; c = e^(-2+eps) links it to its eps form."""
    _positive("c", c)
    args, shape = _prepare(x)
    _require(pi_lower_linear_domain(args), args, "pi_lower_linear")
    z = args / (1.0 + c)
    return _finish(np.exp(lambertw(z, Branch.PRINCIPAL)) - 1.0, shape)


# --- p_n through W-1 ----------------------------------------------------------


def _index_domain(n: np.ndarray) -> np.ndarray:
    return np.isfinite(n) & (n >= 1)


def pn_upper_domain(n: np.ndarray, shift: float = 0.0) -> np.ndarray:
    with np.errstate(divide="ignore"):
        return _index_domain(n) & Branch.MINUS_ONE.contains(-1.0 / (n + shift))


def pn_upper(n: ArrayLike, shift: float = 0.0) -> np.ndarray | float:
    """-n W-1(-1/(n + shift)); shift 0 bounds p_n from n = 4, shift e from n = 1."""
    if not shift >= 0:
        raise DomainError(f"shift must be nonnegative, got {shift!r}", shift)
    args, shape = _prepare(n)
    _require(pn_upper_domain(args, shift), args, "pn_upper")
    w = lambertw(-1.0 / (args + shift), Branch.MINUS_ONE)
    return _finish(-args * w, shape)


def band_upper_domain(n: np.ndarray, eps: float) -> np.ndarray:
    with np.errstate(divide="ignore"):
        return _index_domain(n) & Branch.MINUS_ONE.contains(-np.exp(1.0 - eps) / n)


def band_upper(n: ArrayLike, eps: float) -> np.ndarray | float:
    """-n W-1(-e^(1-eps)/n)."""
    _positive("eps", eps)
    args, shape = _prepare(n)
    _require(band_upper_domain(args, eps), args, "band_upper")
    w = lambertw(-np.exp(1.0 - eps) / args, Branch.MINUS_ONE)
    return _finish(-args * w, shape)


def band_lower_domain(n: np.ndarray, eps: float) -> np.ndarray:
    m = n - 1.0
    with np.errstate(divide="ignore"):
        return _index_domain(n) & (m > 0) & Branch.MINUS_ONE.contains(-np.exp(1.0 + eps) / m)


def band_lower(n: ArrayLike, eps: float) -> np.ndarray | float:
    """-(n-1) W-1(-e^(1+eps)/(n-1))."""
    _positive("eps", eps)
    args, shape = _prepare(n)
    _require(band_lower_domain(args, eps), args, "band_lower")
    m = args - 1.0
    w = lambertw(-np.exp(1.0 + eps) / m, Branch.MINUS_ONE)
    return _finish(-m * w, shape)


PN_LOWER_EPS = 0.5


def pn_lower_domain(n: np.ndarray) -> np.ndarray:
    return band_lower_domain(n, PN_LOWER_EPS)


def pn_lower(n: ArrayLike) -> np.ndarray | float:
    """-(n-1) W-1(-e^(3/2)/(n-1)), a lower bound on p_n for n >= 14."""
    return band_lower(n, PN_LOWER_EPS)


@dataclass(frozen=True)
class Band:
    """Two-sided estimate of p_n; a side outside its domain is None."""

    upper: float | None
    lower: float | None

    def straddles(self, value: float) -> bool:
        return (self.upper is None or value < self.upper) and (self.lower is None or self.lower < value)


def pn_band(n: int, eps: float) -> Band:
    """Both sides of the eps-band at index n."""
    _positive("eps", eps)
    args = np.array([n], dtype=np.float64)
    upper = band_upper(n, eps) if band_upper_domain(args, eps)[0] else None
    lower = band_lower(n, eps) if band_lower_domain(args, eps)[0] else None
    if upper is None and lower is None:
        raise DomainError(f"both sides of the eps={eps!r} band are undefined at n = {n}", n)
    return Band(upper, lower)


# --- classical inequalities ---------------------------------------------------


def pn_log_lower(n: ArrayLike) -> np.ndarray | float:
    """n ln n < p_n for n >= 1."""
    args, shape = _prepare(n)
    _require(_index_domain(args), args, "pn_log_lower")
    return _finish(args * np.log(args), shape)


def pn_loglog_upper_domain(n: np.ndarray) -> np.ndarray:
    return _index_domain(n) & (n >= 2)


def pn_loglog_upper(n: ArrayLike) -> np.ndarray | float:
    """p_n < n ln(n ln n) for n >= 6."""
    args, shape = _prepare(n)
    _require(pn_loglog_upper_domain(args), args, "pn_loglog_upper")
    return _finish(args * np.log(args * np.log(args)), shape)


def pn_power_upper(n: ArrayLike, eps: float) -> np.ndarray | float:
    """p_n < n {(1+eps) ln n - 1 - ln eps}, the power relaxation of n ln(n ln n)."""
    _positive("eps", eps)
    args, shape = _prepare(n)
    _require(_index_domain(args), args, "pn_power_upper")
    return _finish(args * ((1.0 + eps) * np.log(args) - 1.0 - math.log(eps)), shape)


def pn_linear_upper(n: ArrayLike, c: float) -> np.ndarray | float:
    """p_n < (1 + c) n ln n, with c = e^(-2+eps)."""
    _positive("c", c)
    args, shape = _prepare(n)
    _require(_index_domain(args), args, "pn_linear_upper")
    return _finish((1.0 + c) * args * np.log(args), shape)


def pi_log_lower_domain(x: np.ndarray) -> np.ndarray:
    return np.isfinite(x) & (x > 1)


def pi_log_lower(x: ArrayLike) -> np.ndarray | float:
    """x / ln x < pi(x) for x >= 17."""
    args, shape = _prepare(x)
    _require(pi_log_lower_domain(args), args, "pi_log_lower")
    return _finish(args / np.log(args), shape)


def pi_log_upper_domain(x: np.ndarray) -> np.ndarray:
    return np.isfinite(x) & (x > math.exp(1.5))


def pi_log_upper(x: ArrayLike) -> np.ndarray | float:
    """pi(x) < x / (ln x - 3/2) for x > e^(3/2)."""
    args, shape = _prepare(x)
    _require(pi_log_upper_domain(args), args, "pi_log_upper")
    return _finish(args / (np.log(args) - 1.5), shape)


# --- inequalities used along the way -------------------------------------------


def log_power_gap(x: ArrayLike, eps: float) -> np.ndarray | float:
    """x^eps / (eps e) - ln x, nonnegative and zero only at x = e^(1/eps)."""
    _positive("eps", eps)
    args, shape = _prepare(x)
    _require(np.isfinite(args) & (args > 0), args, "log_power_gap")
    return _finish(args**eps / (eps * math.e) - np.log(args), shape)


def log_convexity_gap(x: ArrayLike, x0: float) -> np.ndarray | float:
    """ln ln x0 + (ln x - ln x0)/ln x0 - ln ln x, positive for x != x0 (x, x0 > 1)."""
    if not x0 > 1:
        raise DomainError(f"x0 must exceed 1, got {x0!r}", x0)
    args, shape = _prepare(x)
    _require(np.isfinite(args) & (args > 1), args, "log_convexity_gap")
    l0 = math.log(x0)
    lx = np.log(args)
    return _finish(math.log(l0) + (lx - l0) / l0 - np.log(lx), shape)
