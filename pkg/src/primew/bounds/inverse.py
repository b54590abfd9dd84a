"""
U(x), the inverse of z -> z ln(z ln z) on z > 1.

The forward map rises monotonically from -inf (z -> 1+) to +inf, so U exists
on the whole real line but has no closed form, not even through W. It is
found by bracketing, bisection and a Newton polish. The unknown is
t = z - 1, with ln z taken as log1p(t), so arguments near z = 1 keep their
digits until the final 1 + t.
"""

import logging
import math

import numpy as np
from numpy.typing import ArrayLike
from scipy.optimize import newton

from ..errors import ConvergenceError, DomainError

log = logging.getLogger(__name__)

T_MIN = 1e-300
BISECTIONS = 64
POLISH_TOL = np.finfo(np.float64).tiny


def forward(z: ArrayLike) -> np.ndarray | float:
    """z ln(z ln z), the map that U inverts."""
    z = np.asarray(z, dtype=np.float64)
    with np.errstate(divide="ignore", invalid="ignore"):
        out = z * np.log(z * np.log(z))
    return float(out) if out.ndim == 0 else out


def _f(t: np.ndarray) -> np.ndarray:
    lz = np.log1p(t)
    return (1.0 + t) * (lz + np.log(lz))


def _df(t: np.ndarray) -> np.ndarray:
    lz = np.log1p(t)
    return lz + np.log(lz) + 1.0 + 1.0 / lz


def _solve_t(x: np.ndarray) -> np.ndarray:
    floor = _f(np.array([T_MIN]))[0]
    if not (np.isfinite(x).all() and (x > floor).all()):
        bad = float(x[~(np.isfinite(x) & (x > floor))][0])
        raise DomainError(f"U({bad!r}) is not representable; U is computed for {floor:.6g} < x < inf", bad)

    hi = np.maximum(math.e, x) - 1.0
    while (short := _f(hi) < x).any():
        hi = np.where(short, 2.0 * hi, hi)
    lo = np.full_like(x, 1e-6)
    while (tall := _f(lo) > x).any():
        lo = np.where(tall, np.maximum(lo * 1e-6, T_MIN), lo)

    # geometric bisection: the bracket can span hundreds of decades
    llo, lhi = np.log(lo), np.log(hi)
    for _ in range(BISECTIONS):
        mid = 0.5 * (llo + lhi)
        below = _f(np.exp(mid)) < x
        llo = np.where(below, mid, llo)
        lhi = np.where(below, lhi, mid)
    t = np.exp(0.5 * (llo + lhi))

    # array-mode newton stops on |step| < tol alone and ignores rtol
    with np.errstate(all="ignore"):
        polished = np.atleast_1d(
            newton(lambda s: _f(s) - x, t, fprime=_df, tol=POLISH_TOL, maxiter=8, disp=False)
        )
        better = np.isfinite(polished) & (polished > 0) & (np.abs(_f(polished) - x) <= np.abs(_f(t) - x))
    t = np.where(better, polished, t)
    if not np.isfinite(t).all():
        raise ConvergenceError("U(x) bisection produced a non-finite value")
    return t


def u_of(x: ArrayLike) -> np.ndarray | float:
    """U(x): the z > 1 with z ln(z ln z) = x."""
    arr = np.asarray(x, dtype=np.float64)
    flat = np.atleast_1d(arr).ravel()
    z = 1.0 + _solve_t(flat)
    log.debug("solved U for %d arguments", flat.size)
    return float(z[0]) if arr.ndim == 0 else z.reshape(arr.shape)


def u_lower(x: ArrayLike) -> np.ndarray | float:
    """U(x) - 1, a lower bound on pi(x) for x >= 11."""
    z = u_of(x)
    return z - 1.0
