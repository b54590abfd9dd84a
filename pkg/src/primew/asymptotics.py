"""
Convergence tables for the asymptotic estimates of pi(x) and p_n.

Each row holds the exact value from a PrimeTable, the estimates keyed by
estimator id, truth/estimate ratios and relative errors. The o(1) claims
behind these estimates can only be watched as trends over a ladder of points,
which is what the tables are for.

Estimator ids:
    pi-w     x / W0(x)
    basic    -n W-1(-1/n)
    refined  -n W-1(-e/n)
    cc1      n ln n
    cc2      n (ln n + ln ln n)
    cc3      n (ln n + ln ln n - 1)
"""

import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable

from .errors import DomainError, RangeError
from .lambert.kernel import Branch, lambertw
from .primes.table import PrimeTable


class Variant(Enum):
    BASIC = "basic"
    REFINED = "refined"


@dataclass(frozen=True)
class ConvergenceRow:
    index: int
    truth: int
    estimates: dict[str, float]
    ratios: dict[str, float] = field(default_factory=dict)
    rel_error: dict[str, float] = field(default_factory=dict)

    @classmethod
    def build(cls, index: int, truth: int, estimates: dict[str, float]) -> "ConvergenceRow":
        ratios = {k: truth / v for k, v in estimates.items()}
        rel_error = {k: abs(v - truth) / truth if truth else math.inf for k, v in estimates.items()}
        return cls(index, truth, estimates, ratios, rel_error)


@dataclass(frozen=True)
class MatchRow:
    """How closely the W estimates reproduce the leading expansion terms."""

    index: int
    two_term_gap: float  # |basic - cc2| / n
    three_term_gap: float  # |refined - cc3| / n


def _ladder(points: Iterable[int]) -> list[int]:
    return sorted({int(p) for p in points})


def pn_estimate(n: int, variant: Variant | str = Variant.BASIC) -> float:
    """-n W-1(-1/n) (basic, n >= 3) or -n W-1(-e/n) (refined, n >= 8)."""
    variant = Variant(variant)
    scale = 1.0 if variant is Variant.BASIC else math.e
    if n < 1 or not Branch.MINUS_ONE.contains(-scale / n):
        smallest = 3 if variant is Variant.BASIC else 8
        raise DomainError(f"the {variant.value} estimate needs n >= {smallest}, got n = {n}", n)
    return -n * lambertw(-scale / n, Branch.MINUS_ONE)


def cesaro_cipolla(n: int, terms: int = 3) -> float:
    """The first `terms` (1 to 3) terms of n (ln n + ln ln n - 1 + ...)."""
    if terms not in (1, 2, 3):
        raise DomainError(f"terms must be 1, 2 or 3, got {terms}", terms)
    if n < 2:
        raise DomainError(f"the expansion needs n >= 2, got n = {n}", n)
    ln = math.log(n)
    value = ln
    if terms >= 2:
        value += math.log(ln)
    if terms == 3:
        value -= 1.0
    return n * value


def pi_ratio_table(t: PrimeTable, points: Iterable[int]) -> list[ConvergenceRow]:
    """pi(x) against x/W0(x); the ratio is pi(x) W(x)/x."""
    rows = []
    for x in _ladder(points):
        if x > t.limit:
            raise RangeError(f"x = {x} is beyond the table limit {t.limit}")
        if x < 0:
            raise DomainError(f"x must be nonnegative, got {x}", x)
        rows.append(ConvergenceRow.build(x, t.pi_of(x), {"pi-w": math.exp(lambertw(x, Branch.PRINCIPAL))}))
    return rows


def _prime(t: PrimeTable, n: int) -> int:
    if n > t.prime_count:
        raise RangeError(f"p_{n} is beyond the table ({t.prime_count} primes)")
    return t.nth_prime(n)


def pn_ratio_table(t: PrimeTable, points: Iterable[int], variant: Variant | str) -> list[ConvergenceRow]:
    """p_n against one W-1 estimate; the ratio is p_n / estimate."""
    variant = Variant(variant)
    return [
        ConvergenceRow.build(n, _prime(t, n), {variant.value: pn_estimate(n, variant)})
        for n in _ladder(points)
    ]


def expansion_error_report(t: PrimeTable, points: Iterable[int]) -> list[ConvergenceRow]:
    """p_n against both W-1 estimates and the 1-, 2- and 3-term expansions."""
    rows = []
    for n in _ladder(points):
        estimates = {
            "basic": pn_estimate(n, Variant.BASIC),
            "refined": pn_estimate(n, Variant.REFINED),
        }
        estimates.update({f"cc{k}": cesaro_cipolla(n, k) for k in (1, 2, 3)})
        rows.append(ConvergenceRow.build(n, _prime(t, n), estimates))
    return rows


def expansion_match_table(points: Iterable[int]) -> list[MatchRow]:
    """Per n, the gaps (divided by n) between the W-1 estimates and the expansion."""
    return [
        MatchRow(
            n,
            abs(pn_estimate(n, Variant.BASIC) - cesaro_cipolla(n, 2)) / n,
            abs(pn_estimate(n, Variant.REFINED) - cesaro_cipolla(n, 3)) / n,
        )
        for n in _ladder(points)
    ]
