import math

import numpy as np
import pytest

from primew.config import Settings
from primew.errors import DomainError, RangeError, ResourceError
from primew.primes import build_table, limit_for_index, limit_for_value


def trial_division(k: int) -> bool:
    if k < 2:
        return False
    return all(k % d for d in range(2, math.isqrt(k) + 1))


@pytest.mark.parametrize("limit, count", [(2, 1), (10, 4), (100, 25), (3, 2)])
def test_prime_count(limit, count):
    assert build_table(limit).prime_count == count


@pytest.mark.parametrize("x, expected", [(0, 0), (1.5, 0), (2, 1), (11, 5), (11.9, 5), (100, 25)])
def test_pi_of(small_table, x, expected):
    assert small_table.pi_of(x) == expected


@pytest.mark.parametrize("n, expected", [(1, 2), (2, 3), (6, 13), (100, 541), (1000, 7919)])
def test_nth_prime(small_table, n, expected):
    assert small_table.nth_prime(n) == expected


def test_matches_trial_division(small_table):
    expected = [k for k in range(small_table.limit + 1) if trial_division(k)]
    assert small_table.primes().tolist() == expected
    assert [small_table.is_prime(k) for k in range(200)] == [trial_division(k) for k in range(200)]


def test_small_segments_give_the_same_table(small_table):
    other = build_table(10_000, Settings(sieve_segment=97, index_block=13))
    assert other.primes().tolist() == small_table.primes().tolist()
    assert other.pi_of(9_999) == small_table.pi_of(9_999)


def test_round_trips(small_table):
    for n in range(1, small_table.prime_count + 1):
        assert small_table.pi_of(small_table.nth_prime(n)) == n
    for x in range(2, small_table.limit + 1, 37):
        assert small_table.nth_prime(small_table.pi_of(x)) <= x


def test_bracketing(small_table):
    for x in range(2, small_table.nth_prime(small_table.prime_count)):
        k = small_table.pi_of(x)
        assert small_table.nth_prime(k) <= x < small_table.nth_prime(k + 1)


def test_pi_range_matches_pi_of(small_table):
    counts = small_table.pi_range(0, 2_000)
    assert counts.tolist() == [small_table.pi_of(k) for k in range(2_001)]
    assert small_table.pi_range(97, 103).tolist() == [25, 25, 25, 25, 26, 26, 27]


def test_primes_range(small_table):
    assert small_table.primes_range(1, 6).tolist() == [2, 3, 5, 7, 11, 13]
    assert small_table.primes_range(99, 100).tolist() == [523, 541]


def test_queries_beyond_the_table(small_table):
    with pytest.raises(RangeError):
        small_table.pi_of(10_001)
    with pytest.raises(RangeError):
        small_table.nth_prime(small_table.prime_count + 1)
    with pytest.raises(RangeError):
        small_table.nth_prime(0)
    with pytest.raises(RangeError):
        small_table.pi_range(0, 20_000)


def test_bad_limits():
    with pytest.raises(DomainError):
        build_table(1)
    with pytest.raises(ResourceError):
        build_table(10**6, Settings(sieve_ceiling=1000))


def test_table_is_read_only(small_table):
    with pytest.raises(ValueError):
        small_table._odd[5] = True


def test_limit_for_index_contains_next_prime(table):
    for n in (1, 2, 3, 10, 100, 1_000, 10_000, 100_000):
        limit = limit_for_index(n)
        assert limit >= table.nth_prime(n + 1)


def test_limit_for_value():
    assert limit_for_value(1) == 3
    assert limit_for_value(1000) == 2000


def test_classical_sandwich(table):
    n = np.arange(1, 100_001, dtype=np.float64)
    p = table.primes_range(1, 100_000)
    assert (n * np.log(n) < p).all()
    assert (p[5:] < (n * np.log(n * np.log(n)))[5:]).all()
    x = np.arange(17, 1_000_001, dtype=np.float64)
    pi = table.pi_range(17, 1_000_000)
    assert (x / np.log(x) < pi).all()
    x = np.arange(5, 1_000_001, dtype=np.float64)
    pi = table.pi_range(5, 1_000_000)
    assert (pi < x / (np.log(x) - 1.5)).all()
