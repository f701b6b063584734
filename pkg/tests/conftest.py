"""
Shared fixtures: catalog entries are expensive, so each one is built at most
once per test session.
"""
from typing import Any, Callable, Dict, Tuple

import pytest

from bosonize import CatalogEntry, example, group_algebra, cyclic_group
from exactfield import CycloNumber
from tensorcore import HopfData


@pytest.fixture(scope="session")
def catalog() -> Callable[..., CatalogEntry]:
    built: Dict[Tuple[str, Tuple[Tuple[str, Any], ...]], CatalogEntry] = {}

    def get(name: str, **params) -> CatalogEntry:
        key = (name, tuple(sorted(params.items())))
        if key not in built:
            built[key] = example(name, **params)
        return built[key]

    return get


@pytest.fixture(scope="session")
def case_ii(catalog) -> CatalogEntry:
    return catalog("case-ii", n=2)


@pytest.fixture(scope="session")
def d8star(catalog) -> CatalogEntry:
    return catalog("d8star")


@pytest.fixture(scope="session")
def sweedler(catalog) -> CatalogEntry:
    return catalog("taft", sign=-1)


@pytest.fixture
def kz2() -> HopfData:
    return group_algebra(cyclic_group(2), generators=[1])


@pytest.fixture
def i_unit() -> CycloNumber:
    return CycloNumber.zeta(4, 1)
