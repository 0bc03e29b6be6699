import warnings

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from widevar.catalog import OMEGA, catalog
from widevar.critsolve import (
    DegenerateSystemError,
    SolverConfig,
    gradient_system,
    hessian_matrix,
    morse_certify,
    solve_critical_points,
)
from widevar.fan import SuperpotentialSpec, general_superpotential
from widevar.laurent import evaluate, parse_polynomial

COUNTS = {"cp2": 3, "cp3": 4, "cp4": 5, "s2xs2": 4, "bl1": 4, "bl2": 5, "bl3": 6, "chekanov": 3}


def _pts(result):
    return [np.array(p.point) for p in result.points]


def test_gradient_system_cp2():
    g1, g2 = gradient_system(catalog("cp2").spec)
    assert g1 == parse_polynomial("z1 + -1 * z1^-1 z2^-1", 2)
    assert g2 == parse_polynomial("z2 + -1 * z1^-1 z2^-1", 2)


def test_gradient_system_chekanov():
    ga, _ = gradient_system(catalog("chekanov").spec)
    assert ga == parse_polynomial("1 * z1 z2^-2 + -1 * z1^-1 z2^-2", 2)


def test_constant_is_degenerate():
    spec = general_superpotential([(3, (0, 0))])
    assert all(g.is_zero() for g in gradient_system(spec))
    with pytest.raises(DegenerateSystemError, match="identically critical"):
        solve_critical_points(spec)


def test_single_term_has_no_critical_points():
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", RuntimeWarning)
        res = solve_critical_points(general_superpotential([(1, (1, 0))]), SolverConfig(starts=20))
    assert res.points == () and "no convergent start" in res.warnings


def test_cp2_roots_of_unity():
    res = solve_critical_points(catalog("cp2").spec, expected=3)
    want = [np.array([w, w]) for w in (1, OMEGA, OMEGA ** 2)]
    got = _pts(res)
    assert len(got) == 3 and res.complete
    for w in want:
        assert min(np.max(np.abs(g - w)) for g in got) < 1e-10
    assert all(p.residual < 1e-12 for p in res.points)


def test_chekanov_points():
    res = solve_critical_points(catalog("chekanov").spec, expected=3)
    got = _pts(res)
    assert len(got) == 3
    for k in range(3):
        w = np.array([1, 2 * OMEGA ** k])
        assert min(np.max(np.abs(g - w)) for g in got) < 1e-10
    assert all(abs(g[0] + 1) > 0.5 for g in got)


@pytest.mark.parametrize("name", list(COUNTS))
def test_catalog_counts_and_residuals(name):
    spec = catalog(name).spec
    res = solve_critical_points(spec, expected=COUNTS[name])
    assert len(res.points) == COUNTS[name]
    for p in res.points:
        assert max(abs(evaluate(g, p.point)) for g in gradient_system(spec)) < 1e-12
        assert p.morse and p.multiplicity == 1


def test_determinism():
    spec = catalog("bl3").spec
    a = solve_critical_points(spec, SolverConfig(seed=7), 6)
    b = solve_critical_points(spec, SolverConfig(seed=7), 6)
    assert [p.point for p in a.points] == [p.point for p in b.points]


def test_default_start_counts():
    cfg = SolverConfig()
    assert cfg.n_starts(1) == 50 and cfg.n_starts(5) == 200 and cfg.n_starts(None) == 500
    assert SolverConfig(starts=9).n_starts(5) == 9


def test_config_validation():
    with pytest.raises(ValueError):
        SolverConfig(newton_tol=0)
    with pytest.raises(ValueError):
        SolverConfig(radius_range=(2.0, 1.0))


def test_morse_s2xs2():
    spec = catalog("s2xs2").spec
    assert np.allclose(hessian_matrix(spec, (1, 1)), np.diag([2, 2]))
    rep = morse_certify(spec, [(1, 1), (1, -1), (-1, 1), (-1, -1)], expected=4)
    assert rep.all_morse and rep.count_matches and rep.morse


@pytest.mark.parametrize("name", ["cp2", "cp3", "cp4"])
def test_cpn_morse(name):
    spec = catalog(name).spec
    assert morse_certify(spec, catalog(name).expected_points()).all_morse


def test_non_morse_detected():
    spec = general_superpotential([(1, (1, 0)), (1, (-1, 0))])
    rep = morse_certify(spec, [(1, 1), (-1, 1)])
    assert rep.flags == (False, False) and not rep.morse
    res = solve_critical_points(spec, SolverConfig(starts=30))
    assert res.points and all(not p.morse and p.multiplicity is None for p in res.points)


def test_count_mismatch_reported():
    res = solve_critical_points(catalog("cp2").spec, SolverConfig(starts=200), expected=4)
    assert res.complete is False and any("expected 4" in w for w in res.warnings)


@settings(max_examples=10, deadline=None)
@given(st.permutations([0, 1, 2]))
def test_axis_permutation_permutes_points(perm):
    spec = catalog("cp3").spec
    permuted = SuperpotentialSpec(3, tuple((w, tuple(e[i] for i in perm)) for w, e in spec.terms))
    base = {tuple(np.round(p.point, 8)) for p in solve_critical_points(spec, expected=4).points}
    moved = {tuple(np.round(p.point, 8)) for p in solve_critical_points(permuted, expected=4).points}
    # coordinate k of the permuted system is coordinate perm[k] of the original
    assert {tuple(pt[i] for i in perm) for pt in base} == moved


@settings(max_examples=15, deadline=None)
@given(st.integers(0, 10 ** 6))
def test_seed_independence_of_solution_set(seed):
    spec = catalog("bl2").spec
    res = solve_critical_points(spec, SolverConfig(seed=seed), expected=5)
    assert len(res.points) == 5
