import os
import time
import sys

import pytest
from hypothesis import settings

sys.path.insert(0, os.path.dirname(__file__))

settings.register_profile("default", deadline=None, max_examples=60)
settings.load_profile("default")

from nmi.combinatorics import complement, graph  # noqa: E402
from nmi.ideal import make_ideal, parse_monomial  # noqa: E402

import known_examples as pg  # noqa: E402


@pytest.fixture(scope="session")
def degree7_ideal():
    return make_ideal(10, [parse_monomial(m, 10) for m in pg.DEGREE7_MONOMIALS])


@pytest.fixture(scope="session")
def antihole():
    return graph(7, pg.ANTIHOLE_EDGES)


@pytest.fixture(scope="session")
def kaiser():
    return graph(12, pg.KAISER_EDGES)


@pytest.fixture(scope="session")
def thirteen():
    return complement(graph(13, pg.THIRTEEN_COMPLEMENT_EDGES))


@pytest.fixture
def triangle_ideal():
    return make_ideal(3, [(1, 1, 0), (0, 1, 1), (1, 0, 1)])


@pytest.fixture
def two_triangles_ideal():
    return make_ideal(6, [(1, 1, 0, 0, 0, 0), (0, 1, 1, 0, 0, 0), (1, 0, 1, 0, 0, 0),
                          (0, 0, 0, 1, 1, 0), (0, 0, 0, 0, 1, 1), (0, 0, 0, 1, 0, 1)])




# -- acceptance reporting --------------------------------------------------------------

_ACCEPTANCE = {}


class _Criterion:
    """Times one acceptance criterion and records a pass/fail line for the summary."""

    def __init__(self, number, title, limit):
        self.number, self.title, self.limit = number, title, limit

    def __enter__(self):
        self.start = time.monotonic()
        return self

    def __exit__(self, exc_type, exc, tb):
        elapsed = time.monotonic() - self.start
        limit = f" (limit {self.limit:g}s)" if self.limit else ""
        timing = f"{elapsed:.2f}s{limit}"
        if exc_type is None and self.limit and elapsed > self.limit:
            line = f"criterion {self.number:2d}: FAIL  {self.title}  [{timing}: over the runtime limit]"
            _ACCEPTANCE[self.number] = line
            print(line)
            raise AssertionError(f"criterion {self.number} exceeded its runtime limit: {timing}")
        status = "PASS" if exc_type is None else "FAIL"
        detail = "" if exc_type is None else f": {exc_type.__name__}: {exc}"
        line = f"criterion {self.number:2d}: {status}  {self.title}  [{timing}]{detail}"
        _ACCEPTANCE[self.number] = line
        print(line)
        return False


@pytest.fixture
def criterion():
    return _Criterion


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for number in sorted(_ACCEPTANCE):
            terminalreporter.write_line(_ACCEPTANCE[number])
