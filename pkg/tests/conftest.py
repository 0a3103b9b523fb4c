import pytest

from meadows import standard_battery


@pytest.fixture(scope="session")
def battery():
    return standard_battery()


@pytest.fixture(scope="session")
def small_battery():
    return tuple(s for s in standard_battery() if s.size <= 30)


@pytest.fixture(scope="session")
def nontrivial_battery():
    return tuple(s for s in standard_battery() if s.zero != s.one)
