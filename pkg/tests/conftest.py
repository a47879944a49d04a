import pytest

from rupower import builtin_config, typical_daily_profile


@pytest.fixture(scope="session")
def mmimo_today():
    return builtin_config("mmimo-today")


@pytest.fixture(scope="session")
def xmimo_future():
    return builtin_config("xmimo-future")


@pytest.fixture(scope="session")
def mmimo_future():
    return builtin_config("mmimo-future")


@pytest.fixture(scope="session")
def xmimo_today_tech():
    return builtin_config("xmimo-today-tech")


@pytest.fixture(scope="session")
def daily_profile():
    return typical_daily_profile()
