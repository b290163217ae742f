import pytest

from flipcayley import named

ALL_NAMES = ("R", "C", "C'", "H", "H'", "O", "O'", "S")


@pytest.fixture(scope="session")
def algebras():
    """Named algebras built once; their internal caches are shared by all tests."""
    return {name: named(name) for name in ALL_NAMES}
