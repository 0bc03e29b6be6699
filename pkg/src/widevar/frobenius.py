"""Pointwise Jacobian-ring computations on a Morse critical set.

When the superpotential is Morse its Jacobian ring splits as one copy of C
per critical point, so every identity here is a finite sum over points.
The formal variable ``t`` never takes a value; t-powers are tracked as
integers next to the complex values.
"""
from __future__ import annotations

import itertools
from collections.abc import Callable, Sequence
from dataclasses import dataclass, field

import numpy as np

from .critsolve import CriticalPoint
from .fan import FanData, SuperpotentialSpec, facet_intersection_nonempty, polytope_vertices
from .invariants import discriminant_vector
from .laurent import LaurentPolynomial, evaluate

DELTA_TOL = 1e-10


class NonSemisimpleError(ValueError):
    pass


@dataclass(frozen=True)
class ClassValue:
    value: LaurentPolynomial
    t_power: int


@dataclass(frozen=True)
class ClassDictionary:
    """Images ``I(a)`` of homology classes, plus a dual basis.

    ``dual_pairs`` holds ``(a, b, c)`` meaning ``a^# = c * b`` with respect to
    the intersection pairing; ``c`` is usually 1 and is -1 for exceptional
    curves.
    """

    entries: dict[str, ClassValue]
    dual_pairs: tuple[tuple[str, str, int], ...]

    def __post_init__(self):
        pairs = []
        for pair in self.dual_pairs:
            a, b, *rest = pair
            c = rest[0] if rest else 1
            for lab in (a, b):
                if lab not in self.entries:
                    raise KeyError(f"dual pair references unknown class {lab!r}")
            pairs.append((a, b, c))
        for lab, cv in self.entries.items():
            if cv.t_power < 0:
                raise ValueError(f"class {lab!r} has negative t-power")
        object.__setattr__(self, "dual_pairs", tuple(pairs))

    def value(self, label: str, z) -> complex:
        return evaluate(self.entries[label].value, z)


@dataclass(frozen=True)
class PointSpectrum:
    points: tuple[tuple[complex, ...], ...]
    delta: tuple[complex, ...]
    dim: int
    morse: tuple[bool, ...] = field(default=())

    def __len__(self) -> int:
        return len(self.points)

    def require_semisimple(self) -> None:
        if self.morse and not all(self.morse):
            raise NonSemisimpleError("spectrum contains a non-Morse point")
        small = [d for d in self.delta if abs(d) <= DELTA_TOL]
        if small:
            raise NonSemisimpleError(f"discriminant vanishes at {len(small)} point(s)")


def point_spectrum(spec: SuperpotentialSpec, points: Sequence[CriticalPoint | Sequence[complex]]) -> PointSpectrum:
    pts, morse = [], []
    for p in points:
        if isinstance(p, CriticalPoint):
            pts.append(p.point)
            morse.append(p.morse)
        else:
            pts.append(tuple(complex(x) for x in p))
            morse.append(True)
    delta = tuple(discriminant_vector(spec, z) for z in pts)
    return PointSpectrum(tuple(pts), delta, spec.dim, tuple(morse))


def _as_function(sigma) -> Callable[[tuple[complex, ...]], complex]:
    if isinstance(sigma, LaurentPolynomial):
        return lambda z: evaluate(sigma, z)
    return sigma


def residue_sum(spectrum: PointSpectrum, sigma) -> complex:
    """``sum_z sigma(z) / Delta(z)`` over the spectrum."""
    spectrum.require_semisimple()
    f = _as_function(sigma)
    return complex(sum(f(z) / d for z, d in zip(spectrum.points, spectrum.delta)))


def frobenius_trace(spectrum: PointSpectrum, sigma, n: int | None = None) -> complex:
    """``(-1)^(n+1) sum_z sigma(z) / Delta(z)``; the ``t^-n`` factor is implicit."""
    n = spectrum.dim if n is None else n
    return (-1) ** (n + 1) * residue_sum(spectrum, sigma)


@dataclass(frozen=True)
class ResidueRow:
    facets: tuple[int, ...]
    exponent: tuple[int, ...]
    computed: complex
    expected: int
    passed: bool


def verify_residue_identities(fan: FanData, spectrum: PointSpectrum, tol: float = 1e-9) -> list[ResidueRow]:
    """Check ``sum_z z^{v_I}/Delta(z)`` for every facet set ``|I| <= n``.

    The sum vanishes unless ``|I| = n`` and the facets in ``I`` meet, in
    which case it is ``(-1)^(n+1)``.
    """
    spectrum.require_semisimple()
    n = fan.dim
    facts = polytope_vertices(fan)
    A = fan.matrix()
    rows = []
    for size in range(n + 1):
        for idx in itertools.combinations(range(fan.r), size):
            v_I = tuple(int(x) for x in A[list(idx)].sum(axis=0)) if idx else (0,) * n
            computed = residue_sum(spectrum, LaurentPolynomial.monomial(v_I))
            expected = 0
            if size == n and facet_intersection_nonempty(facts, idx):
                expected = (-1) ** (n + 1)
            rows.append(ResidueRow(idx, v_I, computed, expected, abs(computed - expected) < tol))
    return rows


@dataclass(frozen=True)
class EulerPoint:
    point: tuple[complex, ...]
    value: complex
    expected: complex
    error: float
    passed: bool


@dataclass(frozen=True)
class EulerReport:
    points: tuple[EulerPoint, ...]
    t_power_ok: bool
    t_power_errors: tuple[str, ...]

    @property
    def passed(self) -> bool:
        return self.t_power_ok and all(p.passed for p in self.points)


def euler_class_check(dictionary: ClassDictionary, spectrum: PointSpectrum, tol: float = 1e-8) -> EulerReport:
    """``sum_i I(a_i^#) I(a_i) == (-1)^(n+1) Delta`` at each point, with t^n audited."""
    n = spectrum.dim
    missing = sorted(set(dictionary.entries) - {a for a, _, _ in dictionary.dual_pairs})
    if missing:
        raise ValueError(f"missing dual pair for class(es) {', '.join(missing)}")
    t_errors = []
    for a, b, _ in dictionary.dual_pairs:
        tp = dictionary.entries[a].t_power + dictionary.entries[b].t_power
        if tp != n:
            t_errors.append(f"{a} * {b}^#: t-power {tp} != {n}")
    out = []
    for z, d in zip(spectrum.points, spectrum.delta):
        total = sum(c * dictionary.value(a, z) * dictionary.value(b, z) for a, b, c in dictionary.dual_pairs)
        expected = (-1) ** (n + 1) * d
        err = abs(total - expected)
        out.append(EulerPoint(z, complex(total), complex(expected), float(err), bool(err < tol)))
    return EulerReport(tuple(out), not t_errors, tuple(t_errors))


def quantum_inclusion_report(dictionary: ClassDictionary, spectrum: PointSpectrum) -> list[dict[str, tuple[complex, int]]]:
    """Per point, the coefficient ``I(a^#)(z)`` and its t-power for every class ``a``."""
    rows = []
    for z in spectrum.points:
        row = {}
        for a, b, c in dictionary.dual_pairs:
            row[a] = (complex(c * dictionary.value(b, z)), dictionary.entries[b].t_power)
        rows.append(row)
    return rows


def frobenius_gram(dictionary: ClassDictionary, spectrum: PointSpectrum, labels: Sequence[str] | None = None) -> np.ndarray:
    """Matrix of ``F(I(a) I(b))`` over the given classes."""
    labels = list(labels or [a for a, _, _ in dictionary.dual_pairs])
    m = len(labels)
    G = np.zeros((m, m), dtype=complex)
    for i, a in enumerate(labels):
        for j, b in enumerate(labels):
            fa, fb = dictionary.entries[a].value, dictionary.entries[b].value
            G[i, j] = frobenius_trace(spectrum, fa * fb)
    return G


@dataclass(frozen=True)
class SemisimplicityVerdict:
    semisimple: bool
    verdict: str


def semisimplicity_check(spectrum: PointSpectrum, expected: int | None) -> SemisimplicityVerdict:
    if expected is not None and len(spectrum) != expected:
        return SemisimplicityVerdict(False, f"incomplete spectrum: {len(spectrum)} of {expected} points")
    if spectrum.morse and not all(spectrum.morse):
        return SemisimplicityVerdict(False, "not semisimple: non-Morse critical point")
    if any(abs(d) <= DELTA_TOL for d in spectrum.delta):
        return SemisimplicityVerdict(False, "not semisimple: vanishing discriminant")
    return SemisimplicityVerdict(True, "semisimple")
