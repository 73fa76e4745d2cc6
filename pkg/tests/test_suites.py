import pytest

from sphereforge.verify import SUITES, run_suite
from sphereforge.workspace import load_fixture

FIXTURES = ("kronecker", "tacked-kronecker", "a3-linear")


@pytest.fixture(scope="module", params=FIXTURES)
def ws(request):
    return load_fixture(request.param)


@pytest.mark.parametrize("suite", list(SUITES))
def test_suite_passes(ws, suite):
    report = run_suite(ws, suite)
    assert report["passed"], report["failures"][:5]
    assert report["suite"] == suite


def test_probe_override_limits_checks():
    ws = load_fixture("kronecker")
    small = run_suite(ws, "serre-duality", probes=["P1", "S1"])
    assert small["passed"]
    assert sum(c["kind"] == "duality" for c in small["checks"]) == 4
