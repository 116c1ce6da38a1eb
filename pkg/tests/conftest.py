"""Shared fixtures: catalog groups and a clean cohomology store per test."""

import pytest

from bvh.catalog import cyclic, dihedral, elementary_abelian, quaternion, semidihedral
from bvh.config import settings
from bvh.store import store


@pytest.fixture(autouse=True)
def reset_store():
    store.configure(
        work_budget=settings.WORK_BUDGET,
        heavy_threshold=settings.HEAVY_THRESHOLD,
        heavy=False,
    )
    yield
    store.configure(heavy=False)


@pytest.fixture(scope="session", autouse=True)
def clear_store_at_end():
    yield
    store.clear()


@pytest.fixture
def c2():
    return cyclic(2)


@pytest.fixture
def c4():
    return cyclic(4)


@pytest.fixture
def klein():
    return elementary_abelian(2, 2)


@pytest.fixture
def d8():
    return dihedral(8)


@pytest.fixture
def q8():
    return quaternion(8)


@pytest.fixture
def sd16():
    return semidihedral(16)
