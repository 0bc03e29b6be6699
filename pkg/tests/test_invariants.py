import numpy as np
import pytest
import sympy
from hypothesis import given, settings, strategies as st

from widevar.catalog import OMEGA, catalog
from widevar.critsolve import solve_critical_points
from widevar.fan import FanError, SuperpotentialSpec
from widevar.invariants import (
    discriminant_hessian,
    discriminant_minorsum,
    discriminant_vector,
    minor_terms,
    quadform_w1,
    quadform_w2_parametrized,
)

from conftest import random_torus_point

TORIC = ["cp2", "cp3", "cp4", "s2xs2", "bl1", "bl2", "bl3"]


def _symbolic_discriminant(spec):
    """Independent route: sympy log-Hessian of the superpotential."""
    n = spec.dim
    z = sympy.symbols(f"z1:{n + 1}")
    P = sum(sympy.nsimplify(w) * sympy.Mul(*[zi ** ei for zi, ei in zip(z, e)]) for w, e in spec.terms)
    H = sympy.Matrix(n, n, lambda i, j: z[i] * sympy.diff(z[j] * sympy.diff(P, z[j]), z[i]))
    return sympy.lambdify(z, (-1) ** (n + 1) * H.det(), "numpy")


def test_cp2_quadform():
    qf = quadform_w1(catalog("cp2").spec)
    for w in (1, OMEGA, OMEGA ** 2):
        assert np.allclose(qf.at((w, w)), [[2 * w, w], [w, 2 * w]])
        c = qf.form_coefficients((w, w))
        assert np.allclose([c[(0, 0)], c[(0, 1)], c[(1, 1)]], [w, w, w])


def test_s2xs2_quadform_diagonal():
    qf = quadform_w1(catalog("s2xs2").spec)
    for z in catalog("s2xs2").expected_points():
        c = qf.form_coefficients(z)
        assert c[(0, 1)] == 0
        assert np.isclose(c[(0, 0)], z[0]) and np.isclose(c[(1, 1)], z[1])


def test_chekanov_quadform():
    qf = quadform_w1(catalog("chekanov").spec)
    for z in catalog("chekanov").expected_points():
        c = qf.form_coefficients(z)
        zb = z[1]
        assert abs(c[(0, 1)]) < 1e-12
        assert np.isclose(c[(0, 0)], zb ** -2)
        assert np.isclose(c[(1, 1)], 12 * zb ** -2)


def test_w2_forms():
    X1, X2 = sympy.symbols("X1 X2")
    xi1, xi2 = sympy.symbols("xi1 xi2")
    phi, delta = quadform_w2_parametrized(catalog("bl1").fan)
    assert sympy.expand(phi - ((xi1 + xi2) * X1 ** 2 + (2 * xi1 + xi2) * X1 * X2 + (xi1 + xi2) * X2 ** 2)) == 0
    phi, _ = quadform_w2_parametrized(catalog("s2xs2").fan)
    assert sympy.expand(phi - (xi1 * X1 ** 2 + xi2 * X2 ** 2)) == 0


@pytest.mark.parametrize("n", [2, 3, 4])
def test_cpn_w2_form_and_discriminant(n):
    # the (-1)^n sign in a_ij is what makes Delta = (-1)^(n+1) (n+1) xi^n for odd n
    xi = sympy.Symbol("xi1")
    X = sympy.symbols(f"X1:{n + 1}")
    phi, delta = quadform_w2_parametrized(catalog(f"cp{n}").fan)
    cross = sum(X[i] * X[j] for i in range(n) for j in range(i + 1, n))
    assert sympy.expand(phi - (-1) ** n * xi * (sum(x ** 2 for x in X) + cross)) == 0
    assert sympy.expand(delta - (-1) ** (n + 1) * (n + 1) * xi ** n) == 0


@pytest.mark.parametrize("name", TORIC)
def test_w2_discriminant_matches_boundary_map(name):
    from widevar.fan import boundary_map, wide_variety_2

    e = catalog(name)
    w2 = wide_variety_2(e.fan)
    _, delta = quadform_w2_parametrized(e.fan)
    for z in e.expected_points():
        xi = boundary_map(e.fan, z)
        # leading coordinates are the free parameters
        lead = [next(k for k, x in enumerate(b) if x != 0) for b in w2.basis]
        val = complex(delta.subs({p: xi[k] for p, k in zip(w2.params, lead)}))
        assert abs(val - discriminant_vector(e.spec, z)) < 1e-9


@pytest.mark.parametrize("n", [2, 3, 4])
def test_cpn_discriminant(n):
    e = catalog(f"cp{n}")
    for z in e.expected_points():
        assert abs(discriminant_vector(e.spec, z) - (-1) ** (n + 1) * (n + 1) * z[0] ** n) < 1e-10
    assert np.isclose(discriminant_vector(catalog("cp2").spec, (1, 1)), -3)


def test_named_values():
    assert np.isclose(discriminant_vector(catalog("s2xs2").spec, (1, 1)), -4)
    assert np.isclose(discriminant_vector(catalog("chekanov").spec, (1, 2)), -3)
    assert np.isclose(discriminant_hessian(catalog("s2xs2").spec, (-1, -1)), -4)
    assert abs(discriminant_hessian(catalog("cp2").spec, (OMEGA, OMEGA)) + 3 * OMEGA ** 2) < 1e-10


def test_minorsum_examples():
    assert np.isclose(discriminant_minorsum(catalog("s2xs2").fan, (1, 1)), -4)
    assert np.isclose(discriminant_minorsum(catalog("cp2").fan, (1, 1)), -3)
    assert sorted(d for _, _, d in minor_terms(catalog("s2xs2").fan)) == [1, 1, 1, 1]


def test_minorsum_rejects_weights():
    with pytest.raises(FanError):
        discriminant_minorsum(catalog("chekanov").spec, (1, 2))


@pytest.mark.parametrize("name", TORIC + ["chekanov"])
def test_vector_matches_symbolic_oracle(name, rng):
    spec = catalog(name).spec
    f = _symbolic_discriminant(spec)
    for _ in range(20):
        z = random_torus_point(rng, spec.dim)
        ref = complex(f(*z))
        assert abs(discriminant_vector(spec, z) - ref) <= 1e-9 * (1 + abs(ref))


@pytest.mark.parametrize("name", TORIC)
def test_cauchy_binet(name, rng):
    e = catalog(name)
    for _ in range(200):
        z = random_torus_point(rng, e.spec.dim)
        dv = discriminant_vector(e.spec, z)
        assert abs(discriminant_minorsum(e.fan, z) - dv) / (1 + abs(dv)) < 1e-9


@pytest.mark.parametrize("name", TORIC + ["chekanov"])
def test_hessian_agrees_on_critical_set(name):
    e = catalog(name)
    for p in solve_critical_points(e.spec, expected=e.expected_count).points:
        assert abs(discriminant_hessian(e.spec, p.point) - discriminant_vector(e.spec, p.point)) < 1e-8


def test_hessian_off_critical_control(caplog):
    spec = catalog("cp2").spec
    with caplog.at_level("WARNING"):
        dh = discriminant_hessian(spec, (2, 2))
    assert abs(dh - discriminant_vector(spec, (2, 2))) > 1e-3
    assert "not critical" in caplog.text


_UNIMODULAR = st.lists(st.sampled_from([((1, 1), (0, 1)), ((1, 0), (1, 1)), ((0, 1), (1, 0)), ((-1, 0), (0, 1)),
                                        ((1, -1), (0, 1)), ((1, 0), (-1, 1))]), min_size=1, max_size=5)


@settings(max_examples=40, deadline=None)
@given(_UNIMODULAR, st.sampled_from(["cp2", "s2xs2", "bl1", "bl2", "bl3", "chekanov"]), st.integers(0, 2 ** 31))
def test_basis_invariance(gens, name, seed):
    # exponents e -> M e; the point z' with z'^{Me} = z^e is z'_i = prod_j z_j^{(M^-1)_{ji}}
    M = np.eye(2, dtype=int)
    for g in gens:
        M = np.array(g) @ M
    assert round(abs(np.linalg.det(M))) == 1
    Minv = np.round(np.linalg.inv(M)).astype(int)
    spec = catalog(name).spec
    moved = SuperpotentialSpec(2, tuple((w, tuple(int(x) for x in M @ np.array(e))) for w, e in spec.terms))
    z = np.array(random_torus_point(np.random.default_rng(seed), 2))
    zp = np.array([np.prod(z ** Minv[:, i]) for i in range(2)])
    for w, e in spec.terms:
        assert np.isclose(np.prod(zp ** (M @ np.array(e))), np.prod(z ** np.array(e)))
    d0, d1 = discriminant_vector(spec, z), discriminant_vector(moved, zp)
    assert abs(d0 - d1) <= 1e-9 * (1 + abs(d0))
