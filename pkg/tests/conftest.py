import pytest

from toricmosaics.census import build_table


@pytest.fixture(scope="session")
def table():
    """The bundled invariant table (cached build, fast to reload)."""
    return build_table()
