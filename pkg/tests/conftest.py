import pytest

from smoothchar import sieve_smooth


@pytest.fixture(scope="session")
def smooth_1e4_y10():
    return sieve_smooth(10_000, 10)


@pytest.fixture(scope="session")
def smooth_1e4_y100():
    return sieve_smooth(10_000, 100)


@pytest.fixture(scope="session")
def smooth_10_y3():
    return sieve_smooth(10, 3)
