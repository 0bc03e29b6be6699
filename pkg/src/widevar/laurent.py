"""Multivariate Laurent polynomials with complex coefficients.

A polynomial is an immutable table ``exponent tuple -> complex``. Terms are
kept sorted lexicographically by exponent, and a coefficient is dropped only
when arithmetic produces an exact zero.

Axes are 0-based in the API; the text form names them ``z1 ... zn``.
"""
from __future__ import annotations

import re
from collections.abc import Iterable, Mapping, Sequence
from numbers import Number

import numpy as np

Exponent = tuple[int, ...]


class DimensionError(ValueError):
    pass


def as_exponent(e: Iterable[int]) -> Exponent:
    raw = tuple(e)
    out = tuple(int(x) for x in raw)
    if out != raw:
        raise ValueError(f"non-integer exponent {raw!r}")
    if not out:
        raise ValueError("exponent vector must have length >= 1")
    return out


def as_torus_point(coords: Iterable[complex], dim: int | None = None) -> np.ndarray:
    """Return ``coords`` as a complex array, checking it lies in (C*)^n."""
    pt = np.asarray(list(coords), dtype=complex)
    if pt.ndim != 1:
        raise ValueError("a torus point is a flat sequence of coordinates")
    if dim is not None and pt.size != dim:
        raise DimensionError(f"point has {pt.size} coordinates, expected {dim}")
    if np.any(pt == 0):
        raise ValueError("torus point has a zero coordinate")
    return pt


class LaurentPolynomial:
    """Finite sum ``sum c_e z^e`` over integer exponent vectors ``e``."""

    __slots__ = ("dim", "_terms")

    def __init__(self, dim: int, terms: Mapping[Exponent, complex] | Iterable[tuple[Exponent, complex]] = ()):
        if dim < 1:
            raise ValueError("dimension must be >= 1")
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Exponent, complex] = {}
        for e, c in items:
            e = as_exponent(e)
            if len(e) != dim:
                raise DimensionError(f"exponent {e} has length {len(e)}, expected {dim}")
            acc[e] = acc.get(e, 0j) + complex(c)
        self.dim = dim
        self._terms: tuple[tuple[Exponent, complex], ...] = tuple(
            (e, c) for e, c in sorted(acc.items()) if c != 0
        )

    @classmethod
    def monomial(cls, exponent: Iterable[int], coeff: complex = 1) -> LaurentPolynomial:
        e = as_exponent(exponent)
        return cls(len(e), [(e, coeff)])

    @classmethod
    def constant(cls, dim: int, value: complex) -> LaurentPolynomial:
        return cls(dim, [((0,) * dim, value)])

    @classmethod
    def variable(cls, dim: int, axis: int) -> LaurentPolynomial:
        e = [0] * dim
        e[axis] = 1
        return cls(dim, [(tuple(e), 1)])

    @property
    def terms(self) -> tuple[tuple[Exponent, complex], ...]:
        return self._terms

    def coefficient(self, exponent: Iterable[int]) -> complex:
        e = as_exponent(exponent)
        for f, c in self._terms:
            if f == e:
                return c
        return 0j

    def is_zero(self) -> bool:
        return not self._terms

    def __len__(self) -> int:
        return len(self._terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Number):
            other = LaurentPolynomial.constant(self.dim, other)  # type: ignore[arg-type]
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        return self.dim == other.dim and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self.dim, self._terms))

    def __repr__(self) -> str:
        return f"LaurentPolynomial({self.dim}, {format_polynomial(self)!r})"

    def __str__(self) -> str:
        return format_polynomial(self)

    def _coerce(self, other) -> LaurentPolynomial:
        if isinstance(other, LaurentPolynomial):
            if other.dim != self.dim:
                raise DimensionError(f"dimension mismatch: {self.dim} vs {other.dim}")
            return other
        if isinstance(other, Number):
            return LaurentPolynomial.constant(self.dim, other)  # type: ignore[arg-type]
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return LaurentPolynomial(self.dim, self._terms + other._terms)

    __radd__ = __add__

    def __neg__(self) -> LaurentPolynomial:
        return LaurentPolynomial(self.dim, [(e, -c) for e, c in self._terms])

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, Number):
            return self.scale(other)  # type: ignore[arg-type]
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        prod = [
            (tuple(a + b for a, b in zip(e, f)), c * d)
            for e, c in self._terms
            for f, d in other._terms
        ]
        return LaurentPolynomial(self.dim, prod)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> LaurentPolynomial:
        if k < 0:
            if len(self._terms) != 1:
                raise ValueError("only monomials have Laurent inverses")
            (e, c), = self._terms
            return LaurentPolynomial.monomial([x * k for x in e], c ** k)
        out = LaurentPolynomial.constant(self.dim, 1)
        for _ in range(k):
            out = out * self
        return out

    def scale(self, s: complex) -> LaurentPolynomial:
        return LaurentPolynomial(self.dim, [(e, c * s) for e, c in self._terms])

    def log_derivative(self, axis: int) -> LaurentPolynomial:
        """``z_j dp/dz_j``: each term ``c z^e`` becomes ``c e_j z^e``."""
        self._check_axis(axis)
        return LaurentPolynomial(self.dim, [(e, c * e[axis]) for e, c in self._terms])

    def partial(self, axis: int) -> LaurentPolynomial:
        """Ordinary partial derivative ``dp/dz_j``."""
        self._check_axis(axis)
        out = []
        for e, c in self._terms:
            if e[axis]:
                f = list(e)
                f[axis] -= 1
                out.append((tuple(f), c * e[axis]))
        return LaurentPolynomial(self.dim, out)

    def _check_axis(self, axis: int) -> None:
        if not 0 <= axis < self.dim:
            raise IndexError(f"axis {axis} out of range for dimension {self.dim}")

    def __call__(self, point) -> complex:
        return evaluate(self, point)

    def exponent_matrix(self) -> tuple[np.ndarray, np.ndarray]:
        """Exponents as an ``(m, n)`` integer array and coefficients as ``(m,)``."""
        if not self._terms:
            return np.zeros((0, self.dim), dtype=int), np.zeros(0, dtype=complex)
        E = np.array([e for e, _ in self._terms], dtype=int)
        c = np.array([c for _, c in self._terms], dtype=complex)
        return E, c


def lp_arith(p: LaurentPolynomial, q: LaurentPolynomial | complex, op: str) -> LaurentPolynomial:
    """Dispatch ``add``, ``sub``, ``mul`` or ``scalar-mul``."""
    if op == "scalar-mul":
        return p.scale(complex(q))  # type: ignore[arg-type]
    if not isinstance(q, LaurentPolynomial):
        raise TypeError("expected a LaurentPolynomial operand")
    if p.dim != q.dim:
        raise DimensionError(f"dimension mismatch: {p.dim} vs {q.dim}")
    if op == "add":
        return p + q
    if op == "sub":
        return p - q
    if op == "mul":
        return p * q
    raise ValueError(f"unknown operation {op!r}")


def log_derivative(p: LaurentPolynomial, axis: int) -> LaurentPolynomial:
    return p.log_derivative(axis)


def evaluate(p: LaurentPolynomial, point) -> complex:
    pt = as_torus_point(point, p.dim)
    total = 0j
    for e, c in p.terms:
        m = c
        for zi, ei in zip(pt, e):
            if ei:
                m *= zi ** ei
        total += m
    return complex(total)


def log_hessian(p: LaurentPolynomial) -> list[list[LaurentPolynomial]]:
    """Matrix ``h_ij = z_i d_i (z_j d_j p)``; term rule ``c z^e -> c e_i e_j z^e``."""
    n = p.dim
    h = [[None] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            entry = LaurentPolynomial(n, [(e, c * e[i] * e[j]) for e, c in p.terms])
            h[i][j] = h[j][i] = entry
    return h  # type: ignore[return-value]


def evaluate_matrix(m: Sequence[Sequence[LaurentPolynomial]], point) -> np.ndarray:
    return np.array([[evaluate(x, point) for x in row] for row in m], dtype=complex)


# -- text form ---------------------------------------------------------------

def _format_coeff(c: complex) -> str:
    if c.imag == 0:
        x = c.real
        if x.is_integer() and abs(x) < 2 ** 53:
            return str(int(x))
        return repr(x)
    return repr(complex(c))


def format_polynomial(p: LaurentPolynomial) -> str:
    """Render as ``c * z1^a1 ... zn^an`` terms joined by `` + ``."""
    if p.is_zero():
        return "0"
    parts = []
    for e, c in p.terms:
        factors = []
        for i, a in enumerate(e):
            if a == 0:
                continue
            factors.append(f"z{i + 1}" if a == 1 else f"z{i + 1}^{a}")
        coeff = _format_coeff(c)
        parts.append(f"{coeff} * {' '.join(factors)}" if factors else coeff)
    return " + ".join(parts)


_FACTOR = re.compile(r"^z(\d+)(?:\^(-?\d+))?$")


def parse_polynomial(text: str, dim: int | None = None) -> LaurentPolynomial:
    """Inverse of :func:`format_polynomial`.

    Terms are separated by `` + ``; each term is a coefficient, a monomial,
    or ``coeff * monomial``. ``dim`` defaults to the largest variable index.
    """
    text = text.strip()
    raw: list[tuple[dict[int, int], complex]] = []
    if text != "0":
        for chunk in text.split(" + "):
            chunk = chunk.strip()
            if " * " in chunk:
                coeff_s, mono_s = chunk.split(" * ", 1)
            elif chunk.startswith("z") or chunk.startswith("-z"):
                coeff_s, mono_s = ("-1", chunk[1:]) if chunk.startswith("-") else ("1", chunk)
            else:
                coeff_s, mono_s = chunk, ""
            try:
                coeff = complex(coeff_s.strip())
            except ValueError as exc:
                raise ValueError(f"bad coefficient in term {chunk!r}") from exc
            powers: dict[int, int] = {}
            for factor in mono_s.split():
                m = _FACTOR.match(factor)
                if m is None:
                    raise ValueError(f"bad factor {factor!r} in term {chunk!r}")
                idx = int(m.group(1)) - 1
                if idx < 0:
                    raise ValueError("variables are numbered from z1")
                powers[idx] = powers.get(idx, 0) + int(m.group(2) or 1)
            raw.append((powers, coeff))
    seen = max((i for powers, _ in raw for i in powers), default=-1) + 1
    if dim is None:
        dim = max(seen, 1)
    elif seen > dim:
        raise DimensionError(f"variable z{seen} exceeds dimension {dim}")
    terms = []
    for powers, coeff in raw:
        e = [0] * dim
        for i, a in powers.items():
            e[i] = a
        terms.append((tuple(e), coeff))
    return LaurentPolynomial(dim, terms)
