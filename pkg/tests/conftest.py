import random

import pytest
from hypothesis import strategies as st

from ilsreconf.core import ILSInstance
from ilsreconf.generators import gen_affine_gadget, gen_chain, gen_equality_chain, gen_hypercube


@pytest.fixture
def affine():
    return gen_affine_gadget()


@pytest.fixture
def eq3():
    return gen_equality_chain(2)


@pytest.fixture
def chain22():
    return gen_chain(2, 2)


@pytest.fixture
def cube3():
    return gen_hypercube(3)


@pytest.fixture
def three_var():
    """x1 - x2 >= 0, -x1 + x2 >= 0, -x1 + x3 >= 0 over {0,1,2}."""
    return ILSInstance.from_rows([[1, -1, 0], [-1, 1, 0], [-1, 0, 1]], [0, 0, 0], 2)


@pytest.fixture
def rng():
    return random.Random(20240601)


@st.composite
def instances(draw, max_n=3, max_d=2, max_m=4, coeffs=(-2, -1, 0, 1, 2)):
    """Small instances built around a feasible point, which is returned with them."""
    n = draw(st.integers(1, max_n))
    d = draw(st.integers(1, max_d))
    m = draw(st.integers(0, max_m))
    point = tuple(draw(st.lists(st.integers(0, d), min_size=n, max_size=n)))
    rows = [draw(st.lists(st.sampled_from(coeffs), min_size=n, max_size=n)) for _ in range(m)]
    rhs = [sum(a * v for a, v in zip(r, point)) - draw(st.integers(0, 2)) for r in rows]
    return ILSInstance.from_rows(rows, rhs, d, n), point


# ---------------------------------------------------------------- acceptance report

_REPORT: list[str] = []


@pytest.fixture
def report():
    """Record one pass/fail line for an acceptance criterion; shown in the terminal summary."""

    def emit(number: int, ok: bool, detail: str) -> bool:
        line = f"criterion {number:>2}: {'PASS' if ok else 'FAIL'}  {detail}"
        print(line)
        _REPORT.append(line)
        return ok

    return emit


def pytest_terminal_summary(terminalreporter):
    if _REPORT:
        terminalreporter.section("acceptance criteria")
        for line in sorted(_REPORT, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
