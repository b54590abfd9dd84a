"""
Checking bounds against the sieve.

`verify_range` compares a bound with the exact pi(x) or p_n at every integer of
a range. The range is cut into shards that may run on a thread pool; shard
reports are merged in argument order, so the result never depends on how the
range was split.
"""

import logging
from concurrent.futures import ThreadPoolExecutor

import numpy as np
from scipy.optimize import bisect

from ..config import DEFAULTS, Settings
from ..errors import AmbiguityError, BracketError, DomainError, RangeError
from ..primes.table import PrimeTable
from .registry import RegisteredBound, registry
from .spec import BoundSpec, Direction, Target, ValidityReport, Violation

log = logging.getLogger(__name__)


def _truth(table: PrimeTable, target: Target, lo: int, hi: int) -> np.ndarray:
    if target is Target.PI:
        return table.pi_range(lo, hi)
    return table.primes_range(lo, hi)


def _check_shard(
    bound: RegisteredBound, spec: BoundSpec, table: PrimeTable, lo: int, hi: int, tol: float
) -> ValidityReport:
    args = np.arange(lo, hi + 1, dtype=np.int64)
    truth = _truth(table, bound.target, lo, hi)
    inside = bound.domain(args.astype(np.float64), spec)
    idx = np.flatnonzero(inside)
    violations = []
    if bound.undefined_fails:
        skipped = []
        for i in np.flatnonzero(~inside):
            violations.append(Violation(int(args[i]), float("nan"), int(truth[i])))
    else:
        skipped = args[~inside].tolist()
    if idx.size:
        values = np.asarray(bound.evaluate(args[idx].astype(np.float64), spec))
        exact = truth[idx].astype(np.float64)
        if bound.direction is Direction.UPPER:
            holds = exact < values
        else:
            holds = values < exact
        marginal = np.abs(values - exact) <= tol * np.maximum(1.0, np.abs(values))
        for i in np.flatnonzero(~holds | marginal):
            violations.append(
                Violation(int(args[idx[i]]), float(values[i]), int(truth[idx[i]]), bool(marginal[i]))
            )
    return ValidityReport.from_parts(spec, lo, hi, violations, skipped)


def _check_range(spec: BoundSpec, table: PrimeTable, lo: int, hi: int) -> RegisteredBound:
    bound = registry.get(spec.family)
    if lo < 0 or lo > hi:
        raise RangeError(f"bad sweep range [{lo}, {hi}]")
    if bound.target is Target.PI and hi > table.limit:
        raise RangeError(f"{spec.label}: x up to {hi} is beyond the table limit {table.limit}")
    if bound.target is Target.PN:
        if lo < 1:
            raise RangeError(f"{spec.label}: prime indices start at 1, got {lo}")
        if hi > table.prime_count:
            raise RangeError(f"{spec.label}: n up to {hi} is beyond the table's {table.prime_count} primes")
    return bound


def verify_range(
    spec: BoundSpec, table: PrimeTable, lo: int, hi: int, settings: Settings = DEFAULTS
) -> ValidityReport:
    """Evaluate the bound at every integer in [lo, hi] and record where it fails."""
    lo, hi = int(lo), int(hi)
    bound = _check_range(spec, table, lo, hi)
    size = settings.shard_size
    shards = [(a, min(a + size - 1, hi)) for a in range(lo, hi + 1, size)]
    tol = settings.marginal_tol

    if settings.workers > 1 and len(shards) > 1:
        with ThreadPoolExecutor(max_workers=settings.workers) as pool:
            parts = list(pool.map(lambda s: _check_shard(bound, spec, table, s[0], s[1], tol), shards))
    else:
        parts = [_check_shard(bound, spec, table, a, b, tol) for a, b in shards]

    report = ValidityReport.merge(parts)
    log.info(
        "%s on [%d, %d]: %d violations, %d skipped, threshold %s",
        spec.label,
        lo,
        hi,
        len(report.violations),
        len(report.skipped),
        report.empirical_threshold,
    )
    return report


def find_threshold(spec: BoundSpec, table: PrimeTable, hi: int, settings: Settings = DEFAULTS) -> int | None:
    """
    Smallest t such that the bound holds at every integer in [t, hi].

    The search starts at the first argument inside the bound's domain, or at
    the first argument at all for `undefined_fails` families; None means the
    bound fails at `hi` itself.
    """
    bound = registry.get(spec.family)
    if bound.undefined_fails:
        start = 0 if bound.target is Target.PI else 1
    else:
        try:
            start = bound.first_valid(spec, int(hi))
        except ValueError:
            return None
    return verify_range(spec, table, start, hi, settings).empirical_threshold


def find_crossover(
    spec_a: BoundSpec,
    spec_b: BoundSpec,
    lo: float,
    hi: float,
    samples: int = 4096,
    xtol: float = 1e-6,
) -> float:
    """
    Locate where bound B - bound A changes sign on [lo, hi].

    Both specs must be pi lower bounds. The difference is sampled on a
    log-spaced grid to find the single sign change, which bisection then
    narrows to `xtol`.
    """
    bounds = [registry.get(s.family) for s in (spec_a, spec_b)]
    for s, b in zip((spec_a, spec_b), bounds):
        if b.target is not Target.PI or b.direction is not Direction.LOWER:
            raise DomainError(f"{s.label} is not a lower bound on pi(x)")
    if not 0 <= lo < hi:
        raise BracketError(f"empty bracket [{lo}, {hi}]")

    def gap(x: np.ndarray) -> np.ndarray:
        return np.asarray(bounds[1].evaluate(x, spec_b)) - np.asarray(bounds[0].evaluate(x, spec_a))

    grid = np.geomspace(lo, hi, samples) if lo > 0 else np.linspace(lo, hi, samples)
    for b, s in zip(bounds, (spec_a, spec_b)):
        if not b.domain(grid, s).all():
            raise DomainError(f"{s.label} is undefined somewhere on [{lo}, {hi}]")
    signs = np.sign(gap(grid))
    nonzero = np.flatnonzero(signs)
    changes = [
        (float(grid[i]), float(grid[j]))
        for i, j in zip(nonzero[:-1], nonzero[1:])
        if signs[i] != signs[j]
    ]
    if not changes:
        raise BracketError(f"{spec_b.label} - {spec_a.label} keeps its sign on [{lo}, {hi}]")
    if len(changes) > 1:
        raise AmbiguityError(
            f"{spec_b.label} - {spec_a.label} changes sign {len(changes)} times on [{lo}, {hi}]", changes
        )
    a, b = changes[0]
    root = bisect(lambda x: float(gap(np.array([x]))[0]), a, b, xtol=xtol)
    log.info("crossover of %s and %s at %.15g", spec_a.label, spec_b.label, root)
    return float(root)
