import math

import pytest

from coxeter_nc.core import affine_A2, dihedral, triangle, type_A, type_B, type_H3


def w(*letters):
    """1-based letters, as written in the docs, to a 0-based word."""
    return tuple(x - 1 for x in letters)


@pytest.fixture
def A2():
    return type_A(2)


@pytest.fixture
def A3():
    return type_A(3)


@pytest.fixture
def B3():
    return type_B(3)


@pytest.fixture
def H3():
    return type_H3()


@pytest.fixture
def I4():
    return dihedral(4)


@pytest.fixture
def Iinf():
    return dihedral(math.inf)


@pytest.fixture
def A2aff():
    return affine_A2()


@pytest.fixture
def tri_inf():
    return triangle(math.inf, math.inf, math.inf)
