"""Clifford deformations of the exterior algebra on n generators.

``Cliff(Q)`` is spanned by ``a_S t^k`` (``S`` a sorted index subset, ``k >= 0``)
subject to ``a_i a_j + a_j a_i = 2 q_ij t``. Setting ``Q = 0`` gives the
exterior algebra. A basis element has degree ``|S| + 2k``.

Coefficients are exact :class:`~fractions.Fraction` when every ``q_ij`` is
rational, complex doubles otherwise.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from numbers import Rational

import numpy as np

Key = tuple[tuple[int, ...], int]


class CliffordAlgebra:
    def __init__(self, Q):
        Q = [list(row) for row in Q]
        n = len(Q)
        if any(len(row) != n for row in Q):
            raise ValueError("Q must be square")
        for i in range(n):
            for j in range(n):
                if Q[i][j] != Q[j][i]:
                    raise ValueError(f"Q is not symmetric at ({i}, {j})")
        self.exact = all(isinstance(x, Rational) for row in Q for x in row)
        conv = Fraction if self.exact else complex
        self.n = n
        self.Q = tuple(tuple(conv(x) for x in row) for row in Q)
        self._zero = conv(0)
        self._one = conv(1)
        self._reduce = lru_cache(maxsize=None)(self._reduce_word)

    # -- elements ------------------------------------------------------------

    def element(self, coeffs: dict[Key, object]) -> CliffordElement:
        return CliffordElement(self, coeffs)

    def one(self) -> CliffordElement:
        return CliffordElement(self, {((), 0): self._one})

    def t(self, power: int = 1) -> CliffordElement:
        return CliffordElement(self, {((), power): self._one})

    def gen(self, i: int) -> CliffordElement:
        if not 0 <= i < self.n:
            raise IndexError(f"generator {i} out of range")
        return CliffordElement(self, {((i,), 0): self._one})

    def basis(self) -> list[tuple[int, ...]]:
        out = []
        for mask in range(1 << self.n):
            out.append(tuple(i for i in range(self.n) if mask >> i & 1))
        return out

    # -- normal ordering -----------------------------------------------------

    def _reduce_word(self, word: tuple[int, ...]) -> tuple[tuple[Key, object], ...]:
        """Normal-order ``a_{w_1} ... a_{w_m}`` into strictly increasing words."""
        for pos in range(len(word) - 1):
            i, j = word[pos], word[pos + 1]
            if i == j:
                # a_i a_i = q_ii t
                rest = self._reduce(word[:pos] + word[pos + 2:])
                return _scaled(rest, self.Q[i][i], 1)
            if i > j:
                # a_i a_j = -a_j a_i + 2 q_ij t
                swapped = self._reduce(word[:pos] + (j, i) + word[pos + 2:])
                acc = dict(_scaled(swapped, -self._one, 0))
                if self.Q[i][j] != 0:
                    contracted = self._reduce(word[:pos] + word[pos + 2:])
                    for key, c in _scaled(contracted, 2 * self.Q[i][j], 1):
                        acc[key] = acc.get(key, self._zero) + c
                return tuple((k, c) for k, c in acc.items() if c != 0)
        return (((word, 0), self._one),)

    def multiply_basis(self, x: Key, y: Key) -> dict[Key, object]:
        out: dict[Key, object] = {}
        for (s, k), c in self._reduce(x[0] + y[0]):
            key = (s, k + x[1] + y[1])
            out[key] = out.get(key, self._zero) + c
        return out


def _scaled(terms, factor, dt):
    return tuple(((s, k + dt), c * factor) for (s, k), c in terms if c * factor != 0)


class CliffordElement:
    __slots__ = ("alg", "coeffs")

    def __init__(self, alg: CliffordAlgebra, coeffs: dict[Key, object]):
        self.alg = alg
        self.coeffs = {
            (tuple(s), int(k)): c for (s, k), c in coeffs.items() if c != 0
        }
        for s, k in self.coeffs:
            if list(s) != sorted(set(s)) or k < 0:
                raise ValueError(f"invalid basis key {(s, k)}")

    def __add__(self, other: CliffordElement) -> CliffordElement:
        out = dict(self.coeffs)
        for key, c in other.coeffs.items():
            out[key] = out.get(key, self.alg._zero) + c
        return CliffordElement(self.alg, out)

    def __neg__(self) -> CliffordElement:
        return CliffordElement(self.alg, {k: -c for k, c in self.coeffs.items()})

    def __sub__(self, other: CliffordElement) -> CliffordElement:
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, CliffordElement):
            return CliffordElement(self.alg, {k: c * other for k, c in self.coeffs.items()})
        out: dict[Key, object] = {}
        for kx, cx in self.coeffs.items():
            for ky, cy in other.coeffs.items():
                for key, c in self.alg.multiply_basis(kx, ky).items():
                    out[key] = out.get(key, self.alg._zero) + cx * cy * c
        return CliffordElement(self.alg, out)

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CliffordElement):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __repr__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for (s, k), c in sorted(self.coeffs.items()):
            mono = "a_{" + "".join(str(i + 1) for i in s) + "}" if s else ""
            tp = f"t^{k}" if k > 1 else ("t" if k == 1 else "")
            parts.append(f"({c})" + (f"*{mono}" if mono else "") + (f"*{tp}" if tp else ""))
        return " + ".join(parts)

    def degrees(self) -> set[int]:
        return {len(s) + 2 * k for s, k in self.coeffs}

    def max_abs_diff(self, other: CliffordElement) -> float:
        keys = set(self.coeffs) | set(other.coeffs)
        z = self.alg._zero
        return max((abs(complex(self.coeffs.get(k, z)) - complex(other.coeffs.get(k, z))) for k in keys), default=0.0)


def clifford_build(Q) -> CliffordAlgebra:
    return CliffordAlgebra(Q)


def relation_defects(alg: CliffordAlgebra) -> dict[tuple[int, int], CliffordElement]:
    """``a_i a_j + a_j a_i - 2 q_ij t`` for every pair; all zero when consistent."""
    out = {}
    for i in range(alg.n):
        for j in range(alg.n):
            ai, aj = alg.gen(i), alg.gen(j)
            out[(i, j)] = ai * aj + aj * ai - alg.t() * (2 * alg.Q[i][j])
    return out


def random_rational_matrix(n: int, rng: np.random.Generator, bound: int = 5) -> list[list[Fraction]]:
    Q = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            Q[i][j] = Q[j][i] = Fraction(int(rng.integers(-bound, bound + 1)), int(rng.integers(1, bound + 1)))
    return Q


def random_element(alg: CliffordAlgebra, rng: np.random.Generator, terms: int = 4, max_t: int = 2) -> CliffordElement:
    basis = alg.basis()
    coeffs: dict[Key, object] = {}
    for _ in range(terms):
        s = basis[int(rng.integers(len(basis)))]
        k = int(rng.integers(max_t + 1))
        c = Fraction(int(rng.integers(-9, 10)), int(rng.integers(1, 6)))
        coeffs[(s, k)] = c if alg.exact else complex(c)
    return CliffordElement(alg, coeffs)


def clifford_suite(n: int, trials: int, seed: int, Q=None) -> dict:
    """Associativity, relation and grading checks on random elements.

    With ``Q=None`` a random rational matrix is drawn from the seed.
    """
    rng = np.random.default_rng(seed)
    if Q is None:
        Q = random_rational_matrix(n, rng)
    alg = clifford_build(Q)
    assoc_fail = grading_fail = 0
    for _ in range(trials):
        x, y, z = (random_element(alg, rng) for _ in range(3))
        if (x * y) * z != x * (y * z):
            assoc_fail += 1
        for kx in x.coeffs:
            for ky in y.coeffs:
                want = len(kx[0]) + 2 * kx[1] + len(ky[0]) + 2 * ky[1]
                if any(len(s) + 2 * k != want for s, k in alg.multiply_basis(kx, ky)):
                    grading_fail += 1
    defects = relation_defects(alg)
    bad_rel = sorted(k for k, d in defects.items() if d != alg.element({}))
    return {
        "n": alg.n,
        "exact": alg.exact,
        "Q": [[str(q) for q in row] for row in alg.Q],
        "trials": trials,
        "associativity_failures": assoc_fail,
        "grading_failures": grading_fail,
        "relation_failures": [list(k) for k in bad_rel],
        "passed": assoc_fail == 0 and grading_fail == 0 and not bad_rel,
    }
