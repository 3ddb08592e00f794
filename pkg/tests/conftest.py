import random

import pytest

from prealt.catalog import n2, octonion, p2, p3_graded
from prealt.fields import QQ, PrimeField


@pytest.fixture
def rng():
    return random.Random(20240817)


@pytest.fixture(scope="session")
def octonions():
    return octonion()


@pytest.fixture(scope="session")
def alg_n2():
    return n2()


@pytest.fixture(scope="session")
def alg_p2():
    return p2()


@pytest.fixture(scope="session")
def alg_p3():
    return p3_graded()
