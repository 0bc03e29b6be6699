"""Toric fan data, superpotentials, the linear wide variety and polytope facts.

The moment polytope is always taken in reflexive normal form
``{x : <v_i, x> >= -1 for all i}``.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np
import sympy
from scipy.optimize import linprog

from .laurent import Exponent, LaurentPolynomial, as_exponent, as_torus_point

VERTEX_TOL = 1e-9


class FanError(ValueError):
    pass


@dataclass(frozen=True)
class FanData:
    vectors: tuple[Exponent, ...]
    labels: tuple[str, ...] = ()
    name: str = ""

    def __post_init__(self):
        vecs = tuple(as_exponent(v) for v in self.vectors)
        if not vecs:
            raise FanError("a fan needs at least one vector")
        if len({len(v) for v in vecs}) != 1:
            raise FanError("vectors have inconsistent lengths")
        labels = tuple(self.labels) or tuple(f"F{i + 1}" for i in range(len(vecs)))
        if len(labels) != len(vecs):
            raise FanError("one label per vector is required")
        object.__setattr__(self, "vectors", vecs)
        object.__setattr__(self, "labels", labels)

    @property
    def dim(self) -> int:
        return len(self.vectors[0])

    @property
    def r(self) -> int:
        return len(self.vectors)

    def matrix(self) -> np.ndarray:
        """The ``r x n`` integer matrix whose rows are the normals."""
        return np.array(self.vectors, dtype=int)


@dataclass(frozen=True)
class SuperpotentialSpec:
    """Weighted term list ``sum nu_k z^{e_k}``."""

    dim: int
    terms: tuple[tuple[complex, Exponent], ...]

    def __post_init__(self):
        terms = []
        for weight, e in self.terms:
            e = as_exponent(e)
            if len(e) != self.dim:
                raise FanError(f"exponent {e} does not have length {self.dim}")
            if complex(weight) == 0:
                raise FanError(f"zero weight on exponent {e}")
            terms.append((complex(weight), e))
        object.__setattr__(self, "terms", tuple(terms))

    @property
    def polynomial(self) -> LaurentPolynomial:
        return LaurentPolynomial(self.dim, [(e, w) for w, e in self.terms])

    @property
    def unit_weights(self) -> bool:
        exps = [e for _, e in self.terms]
        return all(w == 1 for w, _ in self.terms) and len(set(exps)) == len(exps)


@dataclass(frozen=True)
class FanReport:
    n: int
    r: int
    b2: int
    notes: tuple[str, ...] = ()


@dataclass(frozen=True)
class PolytopeFacts:
    dim: int
    vertices: tuple[tuple[float, ...], ...]
    incidence: tuple[frozenset[int], ...]


@dataclass(frozen=True)
class WideVariety2:
    """Rational parametrization of the linear wide variety.

    ``basis`` rows span the solutions of ``sum_k v_k xi_k = 0``; the free
    parameters are the leading coordinates whenever the trailing ``n`` normals
    are independent, which reproduces the usual ``(xi_1, ..., xi_{r-n}, ...)``
    presentation.
    """

    basis: tuple[tuple[Fraction, ...], ...]
    params: tuple[sympy.Symbol, ...]
    coordinates: tuple[sympy.Expr, ...]
    constraints: tuple[sympy.Expr, ...] = field(default=())


def validate_fan(fan: FanData) -> FanReport:
    """Check primitivity, spanning and boundedness; raise :class:`FanError`."""
    for i, v in enumerate(fan.vectors):
        if math.gcd(*v) != 1:
            raise FanError(f"non-primitive vector at index {i}: {v}")
    A = fan.matrix()
    if np.linalg.matrix_rank(A) < fan.dim:
        raise FanError("vectors do not span R^n")
    # bounded iff some strictly positive combination of the normals vanishes
    res = linprog(
        np.zeros(fan.r), A_eq=A.T.astype(float), b_eq=np.zeros(fan.dim),
        bounds=[(1, None)] * fan.r, method="highs",
    )
    if res.status != 0:
        raise FanError("polytope {<v_i,x> >= -1} is unbounded")
    notes = []
    b2 = fan.r - fan.dim
    notes.append(f"r = {fan.r} = n + b2 with b2 = {b2} (informational)")
    facts = polytope_vertices(fan)
    if any(len(s) != fan.dim for s in facts.incidence):
        notes.append("polytope is not simple; facet-intersection test is unreliable")
    return FanReport(n=fan.dim, r=fan.r, b2=b2, notes=tuple(notes))


def build_superpotential(fan: FanData) -> SuperpotentialSpec:
    return SuperpotentialSpec(fan.dim, tuple((1, v) for v in fan.vectors))


def general_superpotential(terms, dim: int | None = None) -> SuperpotentialSpec:
    """Build a spec from ``(weight, exponent)`` pairs; weights may be complex."""
    terms = [(w, as_exponent(e)) for w, e in terms]
    if not terms:
        raise FanError("empty term list")
    if dim is None:
        dim = len(terms[0][1])
    return SuperpotentialSpec(dim, tuple(terms))


def wide_variety_2(fan: FanData) -> WideVariety2:
    n, r = fan.dim, fan.r
    A = sympy.Matrix(fan.matrix().T.tolist())  # n x r
    # pivot from the right so the leading coordinates become the parameters
    rev = A[:, ::-1]
    null = rev.nullspace()
    if len(null) != r - n:
        raise FanError(f"nullspace has dimension {len(null)}, expected {r - n}")
    basis = [list(v[::-1]) for v in null]
    basis.sort(key=lambda b: next(k for k, x in enumerate(b) if x != 0))
    params = sympy.symbols(f"xi1:{r - n + 1}") if r > n else ()
    coords = tuple(
        sympy.expand(sum(b[k] * p for b, p in zip(basis, params))) for k in range(r)
    )
    for row in range(n):
        assert sympy.expand(sum(A[row, k] * coords[k] for k in range(r))) == 0
    constraints = tuple(dict.fromkeys(c for c in coords if c != 0))
    frac_basis = tuple(tuple(Fraction(int(x.p), int(x.q)) for x in b) for b in basis)
    return WideVariety2(frac_basis, tuple(params), coords, constraints)


def boundary_map(fan: FanData, z) -> tuple[complex, ...]:
    """``z -> (z^{v_1}, ..., z^{v_r})``, taking the critical locus into W2."""
    pt = as_torus_point(z, fan.dim)
    return tuple(complex(np.prod(pt ** np.array(v))) for v in fan.vectors)


def polytope_vertices(fan: FanData) -> PolytopeFacts:
    A = fan.matrix().astype(float)
    n = fan.dim
    verts: list[np.ndarray] = []
    for idx in itertools.combinations(range(fan.r), n):
        sub = A[list(idx)]
        if abs(np.linalg.det(sub)) < 0.5:  # integer matrix: det is 0 or |det| >= 1
            continue
        x = np.linalg.solve(sub, -np.ones(n))
        if np.all(A @ x >= -1 - VERTEX_TOL):
            if not any(np.max(np.abs(x - y)) < VERTEX_TOL for y in verts):
                verts.append(x)
    verts.sort(key=lambda x: tuple(np.round(x, 9)))
    incidence = tuple(
        frozenset(int(i) for i in np.flatnonzero(np.abs(A @ x + 1) <= VERTEX_TOL))
        for x in verts
    )
    return PolytopeFacts(n, tuple(tuple(float(c) for c in x) for x in verts), incidence)


def facet_intersection_nonempty(facts: PolytopeFacts, facets) -> bool:
    """Whether the facets indexed by ``facets`` share a point (simple polytopes)."""
    s = frozenset(facets)
    if len(s) > facts.dim:
        raise ValueError(f"index set has {len(s)} > n = {facts.dim} elements")
    if not s:
        return True
    return any(s <= inc for inc in facts.incidence)


def expected_critical_count(facts: PolytopeFacts) -> int:
    return len(facts.vertices)
