import cmath

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from widevar.laurent import (
    DimensionError,
    LaurentPolynomial,
    evaluate,
    evaluate_matrix,
    format_polynomial,
    log_derivative,
    log_hessian,
    lp_arith,
    parse_polynomial,
)

from conftest import laurent_polys, random_torus_point

z1 = LaurentPolynomial.variable(2, 0)
z2 = LaurentPolynomial.variable(2, 1)
P_CP2 = z1 + z2 + (z1 * z2) ** -1
P_S2S2 = z1 + z2 + z1 ** -1 + z2 ** -1


def test_additive_inverse_is_empty():
    p = lp_arith(z1, -z1, "add")
    assert p.is_zero() and p.terms == ()


def test_difference_of_squares():
    assert lp_arith(z1 + z2, z1 - z2, "mul") == z1 ** 2 - z2 ** 2


def test_cp2_superpotential_canonical():
    p = lp_arith(lp_arith(z1, z2, "add"), LaurentPolynomial.monomial((-1, -1)), "add")
    assert [e for e, _ in p.terms] == [(-1, -1), (0, 1), (1, 0)]


def test_scalar_mul_and_sub():
    assert lp_arith(z1, 3, "scalar-mul") == LaurentPolynomial.monomial((1, 0), 3)
    assert lp_arith(z1, z1, "sub").is_zero()


def test_dimension_mismatch_rejected():
    with pytest.raises(DimensionError):
        lp_arith(z1, LaurentPolynomial.variable(3, 0), "add")
    with pytest.raises(DimensionError):
        LaurentPolynomial(2, [((1, 2, 3), 1)])


def test_non_integer_exponent_rejected():
    with pytest.raises(ValueError):
        LaurentPolynomial.monomial((0.5, 1))


def test_log_derivative_examples():
    assert log_derivative(P_CP2, 0) == z1 - (z1 * z2) ** -1
    assert log_derivative(LaurentPolynomial.constant(2, 7), 1).is_zero()
    g = log_derivative(P_S2S2, 0)
    assert g == z1 - z1 ** -1
    assert evaluate(g, (1, 5)) == 0 and evaluate(g, (-1, 5)) == 0
    assert abs(evaluate(g, (2, 5))) > 1


def test_evaluate_examples():
    assert evaluate(P_CP2, (1, 1)) == 3
    assert evaluate(P_S2S2, (1, -1)) == 0
    assert evaluate(LaurentPolynomial.monomial((1, -2)), (2, 1j)) == pytest.approx(-2)


def test_evaluate_rejects_zero_coordinate():
    with pytest.raises(ValueError):
        evaluate(P_CP2, (0, 1))
    with pytest.raises(DimensionError):
        evaluate(P_CP2, (1, 1, 1))


def test_log_hessian_examples():
    p = z1 * z2
    h = log_hessian(p)
    assert all(h[i][j] == p for i in range(2) for j in range(2))
    assert np.allclose(evaluate_matrix(log_hessian(P_S2S2), (1, 1)), [[2, 0], [0, 2]])
    assert np.allclose(evaluate_matrix(log_hessian(P_CP2), (1, 1)), [[2, 1], [1, 2]])


def test_integer_coefficients_exact():
    p = (z1 + 3 * z2) * (z1 - 7 * z2 ** -1)
    for _, c in p.terms:
        assert c.imag == 0 and c.real == int(c.real)


def test_near_zero_coefficients_retained():
    # 0.1 + 0.2 - 0.3 is 5.5e-17 in doubles, not an exact zero
    q = LaurentPolynomial.monomial((1, 0), 0.1 + 0.2) - LaurentPolynomial.monomial((1, 0), 0.3)
    assert not q.is_zero()
    assert q.coefficient((1, 0)) != 0


def test_parse_accepts_shorthand():
    assert parse_polynomial("z1 + -z2 + 2 * z1^-1 z2^3") == z1 - z2 + 2 * LaurentPolynomial.monomial((-1, 3))
    assert parse_polynomial("0", 2).is_zero()


def _finite_difference_log(p, pt, axis, h=1e-5):
    def f(t):
        q = list(pt)
        q[axis] = q[axis] * cmath.exp(t)
        return evaluate(p, q)

    return (f(h) - f(-h)) / (2 * h)


@settings(max_examples=100, deadline=None)
@given(laurent_polys(), st.integers(0, 2), st.integers(0, 2 ** 32 - 1))
def test_log_derivative_matches_finite_difference(p, axis, seed):
    axis = axis % p.dim
    pt = random_torus_point(np.random.default_rng(seed), p.dim, 0.5, 2.0)
    exact = evaluate(log_derivative(p, axis), pt)
    fd = _finite_difference_log(p, pt, axis)
    scale = sum(abs(c) * abs(e[axis]) ** 3 for e, c in p.terms) + 1
    assert abs(exact - fd) <= 1e-6 * scale


@given(laurent_polys())
def test_log_hessian_symmetric_exactly(p):
    h = log_hessian(p)
    for i in range(p.dim):
        for j in range(p.dim):
            assert h[i][j].terms == h[j][i].terms


@given(laurent_polys())
def test_format_parse_round_trip(p):
    assert parse_polynomial(format_polynomial(p), p.dim) == p


@given(laurent_polys(coeff=st.complex_numbers(max_magnitude=1e6, allow_nan=False, allow_infinity=False)))
def test_round_trip_complex_coefficients(p):
    assert parse_polynomial(format_polynomial(p), p.dim) == p


@given(laurent_polys(dim=2), laurent_polys(dim=2), laurent_polys(dim=2))
def test_ring_axioms(p, q, r):
    assert (p + q) * r == p * r + q * r
    assert p * q == q * p
    assert (p * q) * r == p * (q * r)


@given(laurent_polys(dim=2), laurent_polys(dim=2))
def test_evaluation_is_a_homomorphism(p, q):
    pt = (0.7 + 0.2j, -1.3 + 0.5j)
    assert evaluate(p * q, pt) == pytest.approx(evaluate(p, pt) * evaluate(q, pt), rel=1e-9, abs=1e-9)


@given(laurent_polys())
def test_terms_sorted_lexicographically(p):
    exps = [e for e, _ in p.terms]
    assert exps == sorted(exps)
