import pytest

from primew.primes import build_table

SWEEP_LIMIT = 2_000_000  # pi sweeps to 10^6 and p_n sweeps to 10^5 both fit


@pytest.fixture(scope="session")
def small_table():
    return build_table(10_000)


@pytest.fixture(scope="session")
def table():
    return build_table(SWEEP_LIMIT)


@pytest.fixture(scope="session")
def big_table():
    return build_table(10**7)
