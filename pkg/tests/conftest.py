import logging
import random

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from corona_glue import families
from corona_glue.sampling import random_surface

settings.register_profile("default", max_examples=200, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

# non-integral chi on random data is expected and only logged
logging.getLogger("corona_glue.invariants").setLevel(logging.ERROR)

random_surfaces = st.integers(0, 2**32 - 1).map(lambda seed: random_surface(random.Random(seed)))


def family_member(rng: random.Random):
    """A random member of one of the constructed families."""
    kind = rng.choice(["circle", "stick", "x13", "double", "ring", "corona"])
    if kind == "circle":
        k = rng.randint(1, 6)
        return families.x_kl(k, rng.randint(2 - k, k + 1))
    if kind == "stick":
        return families.stick(rng.randint(1, 5))
    if kind == "x13":
        return families.x13()
    if kind == "double":
        return families.double_cover()
    if kind == "ring":
        return families.virus_ring(rng.randint(1, 7), rng.choice(list(families.SEAMS.values())))
    k = rng.randint(1, 5)
    l = rng.randint(1, k + 2)
    a = rng.choice(families.corona_a_range(k, l))
    return families.corona(k, l, a)


family_members = st.integers(0, 2**32 - 1).map(lambda seed: family_member(random.Random(seed)))


_CRITERIA = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n, text): acceptance criterion")


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.outcome != "passed"):
        return
    marker = _MARKS.get(report.nodeid)
    if marker is not None:
        _CRITERIA[marker] = report.outcome


_MARKS = {}


def pytest_collection_modifyitems(items):
    for item in items:
        m = item.get_closest_marker("criterion")
        if m is not None:
            _MARKS[item.nodeid] = (m.args[0], m.args[1])


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for (n, text), outcome in sorted(_CRITERIA.items()):
        status = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"{status}  criterion {n:>2}: {text}")


@pytest.fixture
def rng():
    return random.Random(20240611)
