import pytest

from hyperknot.cocycle import AbelianGroup, cocycle_search, cocycle_span, is_coboundary
from hyperknot.quandle import quandle_alexander
from hyperknot.ring import RingSpec

ACCEPTANCE_LINES = []


def small_specs(limit):
    """Every valid (p, h) with p^d <= limit; h ranges over all monic polynomials with h(0) != 0."""
    import itertools

    out = []
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31):
        d = 1
        while p**d <= limit:
            for low in itertools.product(range(p), repeat=d):
                if low[0] != 0:
                    out.append(RingSpec(p, low + (1,)))
            d += 1
    return out


@pytest.fixture(scope="session")
def d3_spec():
    return RingSpec(3, (1, 1))


@pytest.fixture(scope="session")
def gf4_spec():
    return RingSpec(2, (1, 1, 1))


@pytest.fixture(scope="session")
def d3(d3_spec):
    return quandle_alexander(d3_spec)


@pytest.fixture(scope="session")
def gf4(gf4_spec):
    return quandle_alexander(gf4_spec)


@pytest.fixture(scope="session")
def z2():
    return AbelianGroup((2,))


@pytest.fixture(scope="session")
def z3():
    return AbelianGroup((3,))


@pytest.fixture(scope="session")
def gf4_nontrivial(gf4, z2):
    """First non-coboundary Z_2 cocycle on the GF(4) quandle, in lexicographic table order."""
    span = cocycle_span(cocycle_search(gf4, z2))
    return next(c for c in span if not is_coboundary(c))


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
