import pytest
from hypothesis import HealthCheck, settings

from affcrystal.coordinate import COORD_KINDS, CoordinateCrystal
from affcrystal.cartan import MIN_RANK
from affcrystal.tableau import TableauCrystal

settings.register_profile("default", deadline=None, max_examples=60,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


def small_coordinate(levels=(1, 2)):
    return [CoordinateCrystal(kind, MIN_RANK[kind], l) for kind in COORD_KINDS for l in levels]


def small_tableau(levels=(1, 2)):
    return [TableauCrystal(n, k, l) for n in (1, 2, 3) for k in range(1, n + 1) for l in levels]


@pytest.fixture(scope="session")
def b21():
    return TableauCrystal(3, 2, 1)


ACCEPTANCE = {}


def record(number, ok, detail):
    ACCEPTANCE[number] = (ok, detail)
    return ok


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE):
        ok, detail = ACCEPTANCE[number]
        terminalreporter.write_line(f"criterion {number:>2}: {'PASS' if ok else 'FAIL'}  {detail}")
