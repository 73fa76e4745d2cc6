import pytest

from sphereforge.derived import DObject
from sphereforge.quiver import Quiver, kronecker_regular, projective, simple, injective
from sphereforge.workspace import load_fixture


@pytest.fixture(scope="session")
def kq():
    return Quiver.build(["1", "2"], [("a", "1", "2"), ("b", "1", "2")])


@pytest.fixture(scope="session")
def kobj(kq):
    """Named objects on the Kronecker quiver."""
    m = DObject.module
    out = {
        "P1": m(projective(kq, "1")),
        "P2": m(projective(kq, "2")),
        "I1": m(injective(kq, "1")),
        "I2": m(injective(kq, "2")),
        "S1": m(simple(kq, "1")),
        "S2": m(simple(kq, "2")),
    }
    for lam in ("0", "1", "2", "inf"):
        out["R" + lam] = m(kronecker_regular(kq, lam))
    return out


@pytest.fixture(scope="session")
def kron_ws():
    return load_fixture("kronecker")


@pytest.fixture(scope="session")
def tacked_ws():
    return load_fixture("tacked-kronecker")


@pytest.fixture(scope="session")
def a3_ws():
    return load_fixture("a3-linear")
