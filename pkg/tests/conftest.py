import pytest

from cmreg import PresentedModule, polynomial_ring


@pytest.fixture(scope="session")
def S2():
    return polynomial_ring(["x", "y"])


@pytest.fixture(scope="session")
def S3():
    return polynomial_ring(["x", "y", "z"])


@pytest.fixture(scope="session")
def S4():
    return polynomial_ring(["x", "y", "z", "t"])


@pytest.fixture(scope="session")
def det_ring(S4):
    # k[x,y,z,t] mod the 2x2 minors of [[x, y, z], [y, z, t]] restricted to
    # the three relations x^2, xz, xt - yz
    x, y, z, t = S4.gens()
    return S4.quotient([x * x, x * z, x * t - y * z])


@pytest.fixture(scope="session")
def det_module(det_ring):
    return PresentedModule.cyclic(det_ring, [])


@pytest.fixture(scope="session")
def ci_ring(S2):
    x, y = S2.gens()
    return S2.quotient([x * x, y * y])
