"""Shared fixtures: the heavy per-theory objects (modular data, W-matrix,
fingerprint data) are built once per session and reused everywhere."""

import pytest

from stw import modular
from stw.cocycle import CocycleParams
from stw.group import GroupSpec


@pytest.fixture(scope="session")
def spec():
    return GroupSpec(11, 5, 4)


@pytest.fixture(scope="session")
def params_u(spec):
    def get(u: int) -> CocycleParams:
        return CocycleParams(spec, u)

    return get


@pytest.fixture(scope="session")
def md_u(params_u):
    def get(u: int) -> modular.ModularData:
        return modular.modular_data(params_u(u))

    return get


@pytest.fixture(scope="session")
def wm_u(params_u):
    def get(u: int) -> modular.WMatrix:
        return modular.w_matrix(params_u(u))

    return get


@pytest.fixture(scope="session")
def theory_u(md_u, wm_u):
    cache = {}

    def get(u: int, with_w: bool) -> modular.TheoryData:
        key = (u, with_w)
        if key not in cache:
            cache[key] = modular.theory_data(
                md_u(u), wm_u(u) if with_w else None
            )
        return cache[key]

    return get
