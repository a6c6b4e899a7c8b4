"""Shared fixtures: small real quadratic fields and common moduli."""

import pytest

from torushecke.classnumber import real_quadratic_field
from torushecke.ideals import rational_ideal, unit_ideal


@pytest.fixture(scope="session")
def F2():
    return real_quadratic_field(2)


@pytest.fixture(scope="session")
def F3():
    return real_quadratic_field(3)


@pytest.fixture(scope="session")
def F5():
    return real_quadratic_field(5)


@pytest.fixture(scope="session")
def F10():
    return real_quadratic_field(10)


@pytest.fixture(scope="session")
def one2(F2):
    return unit_ideal(F2)


@pytest.fixture(scope="session")
def seven2(F2):
    return rational_ideal(7, F2)
