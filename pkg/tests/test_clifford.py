from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from widevar.clifford import (
    clifford_build,
    clifford_suite,
    random_element,
    random_rational_matrix,
    relation_defects,
)


def test_exterior_algebra():
    alg = clifford_build([[0, 0], [0, 0]])
    a1, a2 = alg.gen(0), alg.gen(1)
    a12 = alg.element({((0, 1), 0): 1})
    assert a1 * a2 == a12
    assert a2 * a1 == -a12
    assert (a1 * a1).coeffs == {}


def test_identity_form_relation_chase():
    alg = clifford_build([[1, 0], [0, 1]])
    a1, a2 = alg.gen(0), alg.gen(1)
    assert (a1 * a2) * (a2 * a1) == alg.t(2)
    assert a1 * a1 == alg.t()


def test_off_diagonal_cross_term():
    alg = clifford_build([[0, Fraction(1, 2)], [Fraction(1, 2), 0]])
    a1, a2 = alg.gen(0), alg.gen(1)
    # a2 a1 = -a1 a2 + 2 q12 t = -a12 + t
    assert a2 * a1 == alg.element({((0, 1), 0): -1, ((), 1): 1})


def test_non_symmetric_rejected():
    with pytest.raises(ValueError, match="not symmetric"):
        clifford_build([[0, 1], [2, 0]])


def test_exact_and_float_modes():
    assert clifford_build([[Fraction(1, 3)]]).exact
    assert not clifford_build([[0.5]]).exact


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_relations_recovered_exactly(n):
    rng = np.random.default_rng(n)
    alg = clifford_build(random_rational_matrix(n, rng))
    assert all(d.coeffs == {} for d in relation_defects(alg).values())


@settings(max_examples=25, deadline=None)
@given(st.integers(1, 5), st.integers(0, 2 ** 31))
def test_associativity_exact(n, seed):
    rng = np.random.default_rng(seed)
    alg = clifford_build(random_rational_matrix(n, rng))
    x, y, z = (random_element(alg, rng) for _ in range(3))
    assert (x * y) * z == x * (y * z)


@settings(max_examples=25, deadline=None)
@given(st.integers(1, 4), st.integers(0, 2 ** 31))
def test_grading(n, seed):
    rng = np.random.default_rng(seed)
    alg = clifford_build(random_rational_matrix(n, rng))
    for sx in alg.basis():
        for sy in alg.basis():
            for (s, k) in alg.multiply_basis((sx, 1), (sy, 0)):
                assert len(s) + 2 * k == len(sx) + 2 + len(sy)


@settings(max_examples=25, deadline=None)
@given(st.integers(1, 4), st.integers(0, 2 ** 31))
def test_distributivity(n, seed):
    rng = np.random.default_rng(seed)
    alg = clifford_build(random_rational_matrix(n, rng))
    x, y, z = (random_element(alg, rng) for _ in range(3))
    assert x * (y + z) == x * y + x * z


def test_suite_report():
    rep = clifford_suite(3, 50, 1)
    assert rep["passed"] and rep["exact"] and rep["associativity_failures"] == 0
