"""Two-torus enumerative algebra over exact integers and rationals.

The disk counts are inputs; nothing here computes them from geometry.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational


@dataclass(frozen=True)
class TriangleCounts:
    n_P: int
    n_Q: int
    n_R: int
    n_PQR: int

    def __post_init__(self):
        for name in ("n_P", "n_Q", "n_R", "n_PQR"):
            if not isinstance(getattr(self, name), int):
                raise TypeError(f"{name} must be an integer")


@dataclass(frozen=True)
class SigmaTau:
    sigma: Rational
    tau: Rational

    @property
    def discriminant(self) -> Rational:
        return self.sigma ** 2 + 4 * self.tau


def triangle_discriminant(c: TriangleCounts) -> int:
    p, q, r = c.n_P, c.n_Q, c.n_R
    return 4 * c.n_PQR + p * p + q * q + r * r - 2 * p * q - 2 * q * r - 2 * r * p


def sigma_tau_from_counts(c: TriangleCounts) -> SigmaTau:
    st = SigmaTau(c.n_P - c.n_Q - c.n_R, c.n_PQR - c.n_Q * c.n_R)
    assert st.discriminant == triangle_discriminant(c)
    return st


def sigma_tau_shift(st: SigmaTau, r: Rational) -> SigmaTau:
    """Effect of replacing the point class ``p`` by ``p + r [L] t``."""
    return SigmaTau(st.sigma + 2 * r, st.tau - st.sigma * r - r * r)


def sigma_tau_from_structural(a11, a22, a_prime, a_second) -> tuple[SigmaTau, bool]:
    """``sigma = a'' - a'`` and ``tau = a' a'' - a11 a22 / 4``.

    The boolean confirms ``sigma^2 + 4 tau == a12^2 - a11 a22`` with
    ``a12 = a' + a''``.
    """
    a11, a22, a1, a2 = (Fraction(x) for x in (a11, a22, a_prime, a_second))
    st = SigmaTau(a2 - a1, a1 * a2 - a11 * a22 / 4)
    a12 = a1 + a2
    return st, st.discriminant == a12 * a12 - a11 * a22


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    detail: str = ""


def mod2_report(delta: int, c: TriangleCounts, tau: int) -> list[Check]:
    """Congruences at the trivial representation; failures flag inconsistent data."""
    s = c.n_P + c.n_Q + c.n_R
    checks = [
        Check("delta_parity", (delta - s) % 2 == 0,
              f"Delta mod 2 = {delta % 2}, n_P+n_Q+n_R mod 2 = {s % 2}"),
        Check("delta_mod4", delta % 4 in (0, 1), f"Delta mod 4 = {delta % 4}"),
    ]
    if delta % 2 == 1:
        sigma = c.n_P - c.n_Q - c.n_R
        base = SigmaTau(sigma, tau)
        shifted = {sigma_tau_shift(base, r).tau % 2 for r in range(-3, 4)}
        checks.append(Check("tau_mod2_invariant", len(shifted) == 1,
                            f"tau mod 2 over shifts r in -3..3: {sorted(shifted)}"))
        prods = {(c.n_P * c.n_Q) % 2, (c.n_Q * c.n_R) % 2, (c.n_R * c.n_P) % 2}
        checks.append(Check("pairwise_products_mod2", len(prods) == 1,
                            f"n_P n_Q, n_Q n_R, n_R n_P mod 2 = {sorted(prods)}"))
        lhs = (c.n_PQR + c.n_P * c.n_Q) % 2
        checks.append(Check("npqr_plus_npnq_equals_tau_mod2", lhs == tau % 2,
                            f"n_PQR + n_P n_Q mod 2 = {lhs}, tau mod 2 = {tau % 2}"))
    return checks


def triangle_report(c: TriangleCounts, shift: Rational | None = None) -> dict:
    """Everything the ``triangle`` subcommand emits."""
    delta = triangle_discriminant(c)
    st = sigma_tau_from_counts(c)
    out = {
        "counts": {"n_P": c.n_P, "n_Q": c.n_Q, "n_R": c.n_R, "n_PQR": c.n_PQR},
        "discriminant": delta,
        "sigma": _num(st.sigma),
        "tau": _num(st.tau),
        "sigma2_plus_4tau": _num(st.discriminant),
        "identity_holds": st.discriminant == delta,
        "checks": [
            {"name": ch.name, "passed": ch.passed, "detail": ch.detail}
            for ch in mod2_report(delta, c, int(st.tau))
        ],
    }
    if shift is not None:
        sh = sigma_tau_shift(st, shift)
        out["shift"] = {
            "r": _num(shift),
            "sigma": _num(sh.sigma),
            "tau": _num(sh.tau),
            "sigma2_plus_4tau": _num(sh.discriminant),
            "invariant": sh.discriminant == st.discriminant,
        }
    return out


def _num(x):
    if isinstance(x, Fraction):
        return x.numerator if x.denominator == 1 else str(x)
    return x
