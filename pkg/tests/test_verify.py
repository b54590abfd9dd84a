import math

import numpy as np
import pytest

from primew.bounds import BoundFamily, BoundSpec, band_lower, band_upper, find_crossover, find_threshold, registry, verify_range
from primew.config import Settings
from primew.errors import BracketError, DomainError, RangeError

E_INV = math.exp(-1.0)
E_INV3 = math.exp(-3.0)
CROSSOVER_ESTIMATE = math.exp(2 * math.e + 3)


def spec(family, **kwargs):
    return BoundSpec(BoundFamily(family), **kwargs)


def test_pi_upper_holds_to_a_million(table):
    report = verify_range(spec("pi-upper-w"), table, 0, 1_000_000)
    assert report.holds
    assert report.empirical_threshold == 0
    assert report.skipped == ()


@pytest.mark.slow
def test_pi_upper_holds_to_ten_million(big_table):
    assert verify_range(spec("pi-upper-w"), big_table, 0, 10**7).holds


def test_pn_upper_fails_below_four(table):
    report = verify_range(spec("pn-upper", shift=0.0), table, 1, 100)
    assert [v.argument for v in report.violations] == [1, 2, 3]
    assert math.isnan(report.violations[0].bound)
    assert report.violations[2].bound < report.violations[2].truth == 5
    assert report.empirical_threshold == 4
    assert find_threshold(spec("pn-upper", shift=0.0), table, 100_000) == 4


def test_pn_upper_holds_from_four(table):
    assert verify_range(spec("pn-upper", shift=0.0), table, 4, 100_000).holds
    assert verify_range(spec("pn-upper", shift=math.e), table, 1, 100_000).holds


def test_pn_lower_skips_the_undefined_start(table):
    report = verify_range(spec("pn-lower"), table, 1, 100_000)
    assert report.skipped == tuple(range(1, 14))
    assert report.holds
    assert verify_range(spec("pn-lower"), table, 14, 100_000).holds


@pytest.mark.parametrize(
    "bound, lo",
    [
        (spec("pi-lower-power", epsilon=E_INV), 5),
        (spec("pi-lower-power", epsilon=E_INV3), 0),
        (spec("pi-lower-linear", linear_coeff=math.e), 3),
        (spec("pi-lower-linear", linear_coeff=math.exp(-1.5)), 60),
        (spec("u-inverse"), 11),
        (spec("pi-log-lower"), 17),
        (spec("pi-log-upper"), 5),
    ],
)
def test_pi_bounds_hold_to_a_million(table, bound, lo):
    report = verify_range(bound, table, lo, 1_000_000)
    assert report.holds, report.violations[:5]


def test_pn_classical_bounds(table):
    assert verify_range(spec("pn-log-lower"), table, 1, 100_000).holds
    assert verify_range(spec("pn-loglog-upper"), table, 6, 100_000).holds
    assert verify_range(spec("pn-power-upper", epsilon=0.5), table, 6, 100_000).holds


def test_thresholds(table):
    assert find_threshold(spec("pi-lower-power", epsilon=E_INV), table, 100_000) <= 5
    assert find_threshold(spec("pi-lower-linear", linear_coeff=math.exp(-1.5)), table, 100_000) <= 60


def test_threshold_absent_when_the_bound_fails_at_the_end(table):
    weak = spec("pn-linear-upper", linear_coeff=1e-3)
    assert find_threshold(weak, table, 10_000) is None
    report = verify_range(weak, table, 1, 10_000)
    assert report.empirical_threshold is None
    assert not report.holds


def test_ties_are_flagged_marginal(table):
    # with eps = 1/e the bound at x = 0 equals pi(0) = 0 up to rounding
    report = verify_range(spec("pi-lower-power", epsilon=E_INV), table, 0, 10)
    assert report.violations[0].argument == 0
    assert [v.argument for v in report.marginal] == [0]
    assert report.empirical_threshold == 3


def test_violations_are_genuine(table):
    bound = spec("pi-log-lower")
    entry = registry.get(bound.family)
    report = verify_range(bound, table, 2, 1_000)
    assert report.violations
    for v in report.violations:
        assert entry.evaluate(np.array([float(v.argument)]), bound)[0] >= v.truth
        assert table.pi_of(v.argument) == v.truth


def test_partitioning_does_not_matter(table):
    bound = spec("pi-log-lower")
    whole = verify_range(bound, table, 0, 5_000)
    sharded = verify_range(bound, table, 0, 5_000, Settings(shard_size=37, workers=4))
    assert sharded == whole
    assert whole.skipped == (0, 1)


def test_bad_ranges(table):
    with pytest.raises(RangeError):
        verify_range(spec("pi-upper-w"), table, 10, 5)
    with pytest.raises(RangeError):
        verify_range(spec("pi-upper-w"), table, 0, table.limit + 1)
    with pytest.raises(RangeError):
        verify_range(spec("pn-lower"), table, 0, 10)
    with pytest.raises(RangeError):
        verify_range(spec("pn-lower"), table, 1, table.prime_count + 1)


def test_eps_band_straddles_from_its_threshold(table):
    upper = find_threshold(spec("pn-band-upper", epsilon=0.1), table, 100_000)
    assert upper is not None and 50 < upper <= 1_000
    lower = find_threshold(spec("pn-band-lower", epsilon=0.1), table, 100_000)
    assert lower is not None and 50 < lower <= 10_000
    t = max(upper, lower)
    n = np.arange(t, 100_001, dtype=np.float64)
    p = table.primes_range(t, 100_000)
    assert ((band_lower(n, 0.1) < p) & (p < band_upper(n, 0.1))).all()


# --- crossover ------------------------------------------------------------------


def test_crossover_near_estimate():
    a = spec("pi-lower-power", epsilon=E_INV)
    b = spec("pi-lower-power", epsilon=E_INV3)
    x = find_crossover(a, b, 100, 100_000)
    assert 0.5 <= x / CROSSOVER_ESTIMATE <= 2.0
    entry = registry.get(a.family)
    at_end = np.array([100_000.0])
    assert entry.evaluate(at_end, b)[0] > entry.evaluate(at_end, a)[0]


def test_crossover_of_identical_bounds():
    a = spec("pi-lower-power", epsilon=E_INV)
    with pytest.raises(BracketError):
        find_crossover(a, a, 100, 100_000)


def test_crossover_needs_lower_bounds():
    with pytest.raises(DomainError):
        find_crossover(spec("pi-upper-w"), spec("pi-lower-power", epsilon=E_INV), 100, 1_000)
