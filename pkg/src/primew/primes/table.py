"""
Exact pi(x) and p_n from a segmented sieve of Eratosthenes.

The table keeps one flag per odd number (slot j stands for 2j + 1) and a
cumulative prime count at every block boundary, so pi(x) costs one index lookup
plus a popcount over at most one block. After `build_table` returns, the arrays
are read-only and the table can be shared between threads.
"""

import logging
import math

import numpy as np

from ..config import DEFAULTS, Settings
from ..errors import DomainError, RangeError, ResourceError
from ..lambert.kernel import Branch, lambertw

log = logging.getLogger(__name__)


def _base_primes(limit: int) -> np.ndarray:
    """Plain sieve for the primes up to `limit` (used to strike the segments)."""
    if limit < 2:
        return np.array([], dtype=np.int64)
    is_prime = np.ones(limit + 1, dtype=bool)
    is_prime[:2] = False
    for p in range(2, math.isqrt(limit) + 1):
        if is_prime[p]:
            is_prime[p * p :: p] = False
    return np.flatnonzero(is_prime).astype(np.int64)


def _sieve_odd_flags(limit: int, segment: int) -> np.ndarray:
    n_odd = (limit + 1) // 2
    flags = np.ones(n_odd, dtype=bool)
    flags[0] = False  # slot 0 is the number 1
    base = _base_primes(math.isqrt(limit))[1:]  # odd base primes only

    for seg_lo in range(0, n_odd, segment):
        seg_hi = min(seg_lo + segment, n_odd)
        low, high = 2 * seg_lo + 1, 2 * seg_hi + 1  # odd numbers in [low, high)
        view = flags[seg_lo:seg_hi]
        for p in base:
            p = int(p)
            start = max(p * p, -(-low // p) * p)
            if start % 2 == 0:
                start += p
            if start >= high:
                if p * p >= high:
                    break
                continue
            view[(start - low) // 2 :: p] = False
    return flags


class PrimeTable:
    """
    Immutable sieve product answering pi(x) and p_n up to `limit`.

    Use `build_table` to construct one.
    """

    def __init__(self, limit: int, odd_flags: np.ndarray, block: int):
        self.limit = limit
        self._odd = odd_flags
        self._block = block
        starts = np.arange(0, odd_flags.size, block)
        counts = np.add.reduceat(odd_flags, starts, dtype=np.int64) if starts.size else np.zeros(0, np.int64)
        self._cum = np.concatenate(([0], np.cumsum(counts))).astype(np.int64)
        self.prime_count = int(self._cum[-1]) + 1  # +1 for the prime 2
        self._odd.flags.writeable = False
        self._cum.flags.writeable = False

    def __repr__(self) -> str:
        return f"PrimeTable(limit={self.limit}, prime_count={self.prime_count})"

    def _odd_primes_below_slot(self, end: int) -> int:
        """Number of odd primes among slots [0, end)."""
        b = end // self._block
        return int(self._cum[b]) + int(np.count_nonzero(self._odd[b * self._block : end]))

    def pi_of(self, x: float) -> int:
        """Number of primes <= floor(x)."""
        if math.isnan(x):
            raise DomainError("pi is undefined at NaN", x)
        if x > self.limit:
            raise RangeError(f"pi({x}) is beyond the table limit {self.limit}")
        if x < 2:
            return 0
        n = math.floor(x)
        return 1 + self._odd_primes_below_slot((n - 1) // 2 + 1)

    def nth_prime(self, n: int) -> int:
        """The n'th prime, p_1 = 2."""
        if n < 1:
            raise RangeError(f"prime index must be positive, got {n}")
        if n > self.prime_count:
            raise RangeError(f"p_{n} is beyond the table ({self.prime_count} primes up to {self.limit})")
        if n == 1:
            return 2
        k = n - 1  # ordinal among odd primes
        b = int(np.searchsorted(self._cum, k, side="left")) - 1
        block = self._odd[b * self._block : (b + 1) * self._block]
        j = b * self._block + int(np.flatnonzero(block)[k - int(self._cum[b]) - 1])
        return 2 * j + 1

    def is_prime(self, k: int) -> bool:
        if k > self.limit:
            raise RangeError(f"{k} is beyond the table limit {self.limit}")
        if k == 2:
            return True
        if k < 2 or k % 2 == 0:
            return False
        return bool(self._odd[(k - 1) // 2])

    def pi_range(self, lo: int, hi: int) -> np.ndarray:
        """pi(k) for every integer k in [lo, hi]."""
        if lo > hi:
            raise RangeError(f"empty range [{lo}, {hi}]")
        if hi > self.limit:
            raise RangeError(f"pi range up to {hi} is beyond the table limit {self.limit}")
        ks = np.arange(lo, hi + 1, dtype=np.int64)
        flags = np.zeros(ks.size, dtype=bool)
        odd = (ks % 2 == 1) & (ks > 1)
        flags[odd] = self._odd[(ks[odd] - 1) // 2]
        flags[ks == 2] = True
        return self.pi_of(lo - 1) + np.cumsum(flags, dtype=np.int64)

    def primes_range(self, n_lo: int, n_hi: int) -> np.ndarray:
        """p_n for every n in [n_lo, n_hi]."""
        if n_lo < 1 or n_lo > n_hi:
            raise RangeError(f"bad prime index range [{n_lo}, {n_hi}]")
        if n_hi > self.prime_count:
            raise RangeError(f"p_{n_hi} is beyond the table ({self.prime_count} primes up to {self.limit})")
        parts = [np.array([2], dtype=np.int64)] if n_lo == 1 else []
        first = max(n_lo, 2)
        if first <= n_hi:
            j_lo = (self.nth_prime(first) - 1) // 2
            j_hi = (self.nth_prime(n_hi) - 1) // 2
            slots = j_lo + np.flatnonzero(self._odd[j_lo : j_hi + 1])
            parts.append(2 * slots.astype(np.int64) + 1)
        return np.concatenate(parts)

    def primes(self) -> np.ndarray:
        return self.primes_range(1, self.prime_count)


def build_table(limit: int, settings: Settings = DEFAULTS) -> PrimeTable:
    """Sieve every prime up to `limit`."""
    limit = int(limit)
    if limit < 2:
        raise DomainError(f"sieve limit must be at least 2, got {limit}", limit)
    if limit > settings.sieve_ceiling:
        raise ResourceError(limit, settings.sieve_ceiling)
    flags = _sieve_odd_flags(limit, settings.sieve_segment)
    table = PrimeTable(limit, flags, settings.index_block)
    log.debug("sieved %d primes up to %d", table.prime_count, limit)
    return table


def limit_for_index(n: int) -> int:
    """
    A sieve limit that is sure to contain p_(n+1).

    Uses p_m < -m W-1(-1/(m + e)), which holds for every m >= 1.
    """
    m = max(int(n), 0) + 1
    bound = -m * lambertw(-1.0 / (m + math.e), Branch.MINUS_ONE)
    return max(math.ceil(bound) + 1, 3)


def limit_for_value(x: float) -> int:
    """A sieve limit that contains the next prime after x (Bertrand: p < 2x)."""
    return max(2 * math.ceil(x), 3)
