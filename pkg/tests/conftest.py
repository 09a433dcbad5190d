import pytest

from descyc.graph import build_components


@pytest.fixture(scope="session")
def components():
    """Component reports built once per session, keyed by degree."""
    cache = {}

    def get(n: int):
        if n not in cache:
            cache[n] = build_components(n)
        return cache[n]

    return get
