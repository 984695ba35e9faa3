import pytest

from mtckit import dataio
from mtckit.center import center_for

SMALL_FIXTURES = ("vec", "semion", "toric-code", "fibonacci")
ALL_FIXTURES = SMALL_FIXTURES + ("haagerup-center",)


@pytest.fixture(scope="session")
def fixture_data():
    """name -> (ModularData, FusionRing), built once per session."""
    return {name: (dataio.catalog(name), dataio.catalog_ring(name)) for name in ALL_FIXTURES}


@pytest.fixture(scope="session")
def fixture_centers(fixture_data):
    """name -> CenterData, sharing the session-wide gfs caches."""
    return {name: center_for(md, fr) for name, (md, fr) in fixture_data.items()}
