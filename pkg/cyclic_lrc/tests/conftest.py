import pytest

from cyclic_lrc.construction import ConstructionParams, build_code


@pytest.fixture(scope='session')
def example1_params():
    # n = 15 over GF(16), D_g = {7, 8}
    return ConstructionParams(n_list=(3, 5), rho=(2, 2), dg=(7, 8), q=16)


@pytest.fixture(scope='session')
def example2_params():
    # n = 12 over GF(13), D_g = {5, 7}
    return ConstructionParams(n_list=(3, 4), rho=(2, 2), dg=(5, 7), q=13)


@pytest.fixture(scope='session')
def desk_params():
    # n = 6 over GF(7), no global roots
    return ConstructionParams(n_list=(2, 3), rho=(2, 2), q=7)


@pytest.fixture(scope='session')
def example1_code(example1_params):
    return build_code(example1_params)


@pytest.fixture(scope='session')
def example2_code(example2_params):
    return build_code(example2_params)


@pytest.fixture(scope='session')
def desk_code(desk_params):
    return build_code(desk_params)
