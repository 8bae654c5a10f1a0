import pytest

from malgebra import models


@pytest.fixture(scope="session")
def f1():
    return models.fixture_f1()


@pytest.fixture(scope="session")
def t2():
    return models.fixture_t2()


@pytest.fixture(scope="session")
def t2max():
    return models.fixture_t2_maximal()


@pytest.fixture(scope="session")
def r2():
    return models.fixture_r2()


@pytest.fixture(scope="session")
def r2full():
    return models.fixture_r2_full()


@pytest.fixture(scope="session")
def r3():
    return models.fixture_r3()


@pytest.fixture(scope="session")
def r3full():
    return models.fixture_r3_full()
