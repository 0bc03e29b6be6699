"""Quadratic form on degree n-1 classes and its discriminant.

Sign convention: ``a_ij = (-1)^n sum_k nu_k e_k^i e_k^j z^{e_k}`` and
``Delta = -det(a) = (-1)^(n+1) det(sum_k nu_k e_k e_k^T z^{e_k})``.
For surfaces (n = 2) this is the plain ``-det``.
"""
from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass

import numpy as np
import sympy

from .fan import FanData, FanError, SuperpotentialSpec, build_superpotential, wide_variety_2
from .laurent import LaurentPolynomial, as_torus_point, evaluate, evaluate_matrix

log = logging.getLogger(__name__)

OFF_CRITICAL_WARN = 1e-8


@dataclass(frozen=True)
class QuadFormMatrix:
    """Symmetric matrix ``a_ij``; the form is ``phi(X) = 1/2 sum a_ij X_i X_j``."""

    entries: tuple[tuple[object, ...], ...]
    sign: int  # (-1)^n, already folded into entries

    @property
    def dim(self) -> int:
        return len(self.entries)

    def at(self, z) -> np.ndarray:
        return evaluate_matrix(self.entries, z)  # type: ignore[arg-type]

    def form_coefficients(self, z) -> dict[tuple[int, int], complex]:
        """Coefficients of ``X_i X_j`` (i <= j) in ``phi`` at ``z``."""
        a = self.at(z)
        return {
            (i, j): complex(a[i, i] / 2 if i == j else a[i, j])
            for i in range(self.dim) for j in range(i, self.dim)
        }


def quadform_w1(spec: SuperpotentialSpec) -> QuadFormMatrix:
    n = spec.dim
    sign = (-1) ** n
    p = spec.polynomial
    rows = []
    for i in range(n):
        rows.append(tuple(
            LaurentPolynomial(n, [(e, sign * c * e[i] * e[j]) for e, c in p.terms])
            for j in range(n)
        ))
    return QuadFormMatrix(tuple(rows), sign)


def quadform_w2(fan: FanData) -> sympy.Matrix:
    """``a_ij(xi) = (-1)^n sum_k v_k^i v_k^j xi_k`` as linear forms in ``xi_1..xi_r``."""
    n = fan.dim
    xi = sympy.symbols(f"xi1:{fan.r + 1}")
    a = sympy.zeros(n, n)
    for v, x in zip(fan.vectors, xi):
        for i in range(n):
            for j in range(n):
                a[i, j] += (-1) ** n * v[i] * v[j] * x
    return a


def quadform_w2_parametrized(fan: FanData) -> tuple[sympy.Expr, sympy.Expr]:
    """``phi`` and ``Delta`` on the W2 parametrization, in symbols ``X1..Xn``."""
    w2 = wide_variety_2(fan)
    xi = sympy.symbols(f"xi1:{fan.r + 1}")
    sub = dict(zip(xi, w2.coordinates))
    a = quadform_w2(fan).subs(sub, simultaneous=True)
    X = sympy.symbols(f"X1:{fan.dim + 1}")
    phi = sympy.expand(sum(a[i, j] * X[i] * X[j] for i in range(fan.dim) for j in range(fan.dim)) / 2)
    delta = sympy.expand(-a.det())
    return phi, delta


def discriminant_vector(spec: SuperpotentialSpec, z) -> complex:
    """Reference discriminant, total in ``z``."""
    n = spec.dim
    pt = as_torus_point(z, n)
    H = np.zeros((n, n), dtype=complex)
    for w, e in spec.terms:
        ev = np.array(e, dtype=float)
        H += w * np.prod(pt ** np.array(e)) * np.outer(ev, ev)
    return complex((-1) ** (n + 1) * np.linalg.det(H))


def discriminant_hessian(spec: SuperpotentialSpec, z) -> complex:
    """``(-1)^(n+1) z_1^2 ... z_n^2 det(d^2 P / dz_i dz_j)``, valid on the critical set."""
    n = spec.dim
    pt = as_torus_point(z, n)
    p = spec.polynomial
    grad = [p.partial(i) for i in range(n)]
    g_norm = max(abs(evaluate(g, pt) * pt[i]) for i, g in enumerate(grad))
    if g_norm > OFF_CRITICAL_WARN:
        log.warning("point is not critical (|g| = %.3g); Hessian formula does not apply", g_norm)
    hess = np.array([[evaluate(grad[i].partial(j), pt) for j in range(n)] for i in range(n)])
    return complex((-1) ** (n + 1) * np.prod(pt ** 2) * np.linalg.det(hess))


def minor_terms(fan: FanData) -> list[tuple[tuple[int, ...], tuple[int, ...], int]]:
    """Every n-subset ``I`` with ``det(A_I) != 0``: ``(I, v_I, det(A_I)^2)``."""
    out = []
    A = fan.matrix()
    for idx in itertools.combinations(range(fan.r), fan.dim):
        d = round(np.linalg.det(A[list(idx)].astype(float)))
        if d:
            v_I = tuple(int(x) for x in A[list(idx)].sum(axis=0))
            out.append((idx, v_I, d * d))
    return out


def discriminant_minorsum(fan: FanData | SuperpotentialSpec, z) -> complex:
    """``(-1)^(n+1) sum_{|I| = n} z^{v_I} det(A_I)^2`` for unit-weight toric input."""
    if isinstance(fan, SuperpotentialSpec):
        if not fan.unit_weights:
            raise FanError("minor-sum discriminant needs unit weights (toric mode)")
        fan = FanData(tuple(e for _, e in fan.terms))
    n = fan.dim
    pt = as_torus_point(z, n)
    total = sum(d2 * np.prod(pt ** np.array(v_I)) for _, v_I, d2 in minor_terms(fan))
    return complex((-1) ** (n + 1) * total)


def spec_of(fan_or_spec: FanData | SuperpotentialSpec) -> SuperpotentialSpec:
    if isinstance(fan_or_spec, FanData):
        return build_superpotential(fan_or_spec)
    return fan_or_spec
