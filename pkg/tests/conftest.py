import pytest

from kendallcodes import build_table


@pytest.fixture(scope="session")
def table150():
    """One shared recurrence table; large enough for every cross-check here."""
    return build_table(150)


@pytest.fixture(scope="session")
def table60():
    return build_table(60)
