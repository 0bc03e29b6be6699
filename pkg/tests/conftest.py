import re

import numpy as np
import pytest
from hypothesis import strategies as st

from widevar.laurent import LaurentPolynomial

_CRITERION = re.compile(r"test_acceptance\.py::test_criterion_(\d+)")
_outcomes: dict[int, bool] = {}


def pytest_runtest_logreport(report):
    m = _CRITERION.search(report.nodeid)
    if not m:
        return
    k = int(m.group(1))
    if report.when == "call" or report.outcome != "passed":
        _outcomes[k] = _outcomes.get(k, True) and report.outcome == "passed"


def pytest_terminal_summary(terminalreporter):
    if not _outcomes:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(_outcomes):
        terminalreporter.write_line(f"criterion {k:2d}: {'PASS' if _outcomes[k] else 'FAIL'}")


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


def random_torus_point(rng, n, lo=0.3, hi=3.0):
    r = np.exp(rng.uniform(np.log(lo), np.log(hi), n))
    return tuple(r * np.exp(1j * rng.uniform(0, 2 * np.pi, n)))


@st.composite
def laurent_polys(draw, dim=None, max_terms=5, max_exp=3, coeff=st.integers(-6, 6)):
    n = draw(st.integers(1, 3)) if dim is None else dim
    exps = st.tuples(*[st.integers(-max_exp, max_exp)] * n)
    terms = draw(st.lists(st.tuples(exps, coeff), max_size=max_terms))
    return LaurentPolynomial(n, terms)
