"""Shared Cartan data and algebra contexts for the test suite."""

import pytest

from klrcalc import CartanDatum, KLRContext

# Rank-two symmetrizable Cartan data, given by the symmetric dot form.
A2_DOT = [[2, -1], [-1, 2]]
B2_DOT = [[2, -2], [-2, 4]]      # i is the short root
B2R_DOT = [[4, -2], [-2, 2]]     # i is the long root
G2_DOT = [[2, -3], [-3, 6]]


def make_cartan(dot):
    return CartanDatum(["i", "j"], dot)


@pytest.fixture(scope="session")
def cartan_a2():
    return make_cartan(A2_DOT)


@pytest.fixture(scope="session")
def cartan_b2():
    return make_cartan(B2_DOT)


@pytest.fixture(scope="session")
def cartan_b2r():
    return make_cartan(B2R_DOT)


@pytest.fixture(scope="session")
def cartan_g2():
    return make_cartan(G2_DOT)


@pytest.fixture(scope="session")
def ctx_a2(cartan_a2):
    return KLRContext(cartan_a2)


@pytest.fixture(scope="session")
def ctx_b2(cartan_b2):
    return KLRContext(cartan_b2)


@pytest.fixture(scope="session")
def ctx_b2r(cartan_b2r):
    return KLRContext(cartan_b2r)


@pytest.fixture(scope="session")
def ctx_g2(cartan_g2):
    return KLRContext(cartan_g2)
