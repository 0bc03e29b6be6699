"""Critical points of a superpotential on the algebraic torus.

Newton runs in logarithmic coordinates ``z = exp(w)``: the system is
``g_j = z_j dP/dz_j`` and its Jacobian ``J_ij = z_i d_i g_j`` is the
logarithmic Hessian, so an iterate can never land on a zero coordinate.
"""
from __future__ import annotations

import logging
import warnings
from dataclasses import dataclass

import numpy as np

from .fan import SuperpotentialSpec
from .laurent import LaurentPolynomial

log = logging.getLogger(__name__)

MIN_MODULUS = 1e-6


class DegenerateSystemError(ValueError):
    pass


@dataclass(frozen=True)
class SolverConfig:
    starts: int | None = None
    seed: int = 42
    newton_tol: float = 1e-12
    dedupe_tol: float = 1e-8
    morse_tol: float = 1e-10
    max_iter: int = 100
    radius_range: tuple[float, float] = (0.2, 5.0)

    def __post_init__(self):
        if min(self.newton_tol, self.dedupe_tol, self.morse_tol) <= 0:
            raise ValueError("tolerances must be positive")
        lo, hi = self.radius_range
        if not 0 < lo < hi:
            raise ValueError("radius_range must satisfy 0 < r_min < r_max")
        if self.starts is not None and self.starts < 1:
            raise ValueError("starts must be positive")

    def n_starts(self, expected: int | None) -> int:
        if self.starts is not None:
            return self.starts
        return max(50, 40 * expected) if expected else 500


@dataclass(frozen=True)
class CriticalPoint:
    point: tuple[complex, ...]
    residual: float
    hessian_det: complex
    morse: bool
    multiplicity: int | None  # None when not Morse: scheme structure unknown

    def as_array(self) -> np.ndarray:
        return np.array(self.point, dtype=complex)


@dataclass(frozen=True)
class SolveResult:
    points: tuple[CriticalPoint, ...]
    expected: int | None
    starts: int
    converged_starts: int
    warnings: tuple[str, ...] = ()

    @property
    def complete(self) -> bool | None:
        if self.expected is None:
            return None
        return len(self.points) == self.expected


@dataclass(frozen=True)
class MorseReport:
    flags: tuple[bool, ...]
    all_morse: bool
    count_matches: bool | None
    morse: bool


class _Compiled:
    """Vectorized evaluation of ``g`` and ``J`` from the exponent table."""

    def __init__(self, p: LaurentPolynomial):
        self.E, self.c = p.exponent_matrix()
        self.Ef = self.E.astype(float)

    def monomials(self, w: np.ndarray) -> np.ndarray:
        return self.c * np.exp(self.Ef @ w)

    def grad(self, w: np.ndarray) -> np.ndarray:
        return self.Ef.T @ self.monomials(w)

    def grad_jac(self, w: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        m = self.monomials(w)
        return self.Ef.T @ m, (self.Ef.T * m) @ self.Ef


def gradient_system(spec: SuperpotentialSpec) -> list[LaurentPolynomial]:
    p = spec.polynomial
    return [p.log_derivative(j) for j in range(spec.dim)]


def hessian_matrix(spec: SuperpotentialSpec, z) -> np.ndarray:
    """``H_ij = sum_k nu_k e_k^i e_k^j z^{e_k}``."""
    comp = _Compiled(spec.polynomial)
    _, J = comp.grad_jac(np.log(np.asarray(z, dtype=complex)))
    return J


def _newton(comp: _Compiled, w: np.ndarray, cfg: SolverConfig) -> tuple[np.ndarray, float] | None:
    g, J = comp.grad_jac(w)
    res = float(np.max(np.abs(g)))
    polish = 0
    for _ in range(cfg.max_iter):
        if res < cfg.newton_tol:
            polish += 1
            if polish > 2:
                break
        try:
            step = np.linalg.lstsq(J, -g, rcond=None)[0]
        except np.linalg.LinAlgError:
            return None
        if not np.all(np.isfinite(step)):
            return None
        lam = 1.0
        for _ in range(21):
            w_new = w + lam * step
            g_new = comp.grad(w_new)
            res_new = float(np.max(np.abs(g_new)))
            if np.isfinite(res_new) and res_new < res:
                break
            lam *= 0.5
        else:
            # no decrease: converged to rounding level or stuck
            break
        w = w_new
        g, J = comp.grad_jac(w)
        res = float(np.max(np.abs(g)))
        if np.any(np.abs(w.real) > 40):
            return None
    return w, res


def _dedupe_distance(a: np.ndarray, b: np.ndarray) -> float:
    return float(np.max(np.abs(a - b) / (1 + np.abs(a))))


def _sort_key(pt: tuple[complex, ...]):
    return tuple((round(z.real, 9) + 0.0, round(z.imag, 9) + 0.0) for z in pt)


def solve_critical_points(
    spec: SuperpotentialSpec,
    cfg: SolverConfig | None = None,
    expected: int | None = None,
) -> SolveResult:
    """Multi-start damped Newton for ``z_j dP/dz_j = 0`` on ``(C*)^n``."""
    cfg = cfg or SolverConfig()
    p = spec.polynomial
    grads = gradient_system(spec)
    if all(g.is_zero() for g in grads):
        raise DegenerateSystemError("degenerate: identically critical")
    n = spec.dim
    comp = _Compiled(p)
    n_starts = cfg.n_starts(expected)
    rng = np.random.default_rng(cfg.seed)
    lo, hi = np.log(cfg.radius_range[0]), np.log(cfg.radius_range[1])
    radii = rng.uniform(lo, hi, size=(n_starts, n))
    angles = rng.uniform(0, 2 * np.pi, size=(n_starts, n))

    found: list[np.ndarray] = []
    residuals: list[float] = []
    converged = 0
    for k in range(n_starts):
        out = _newton(comp, radii[k] + 1j * angles[k], cfg)
        if out is None:
            continue
        w, res = out
        if res >= cfg.newton_tol:
            continue
        z = np.exp(w)
        if np.any(np.abs(z) < MIN_MODULUS):
            continue
        converged += 1
        for i, y in enumerate(found):
            if _dedupe_distance(y, z) < cfg.dedupe_tol:
                if res < residuals[i]:
                    found[i], residuals[i] = z, res
                break
        else:
            found.append(z)
            residuals.append(res)

    msgs = []
    if not found:
        msgs.append("no convergent start")
        warnings.warn("no convergent start; critical set reported empty", RuntimeWarning)
    points = []
    for z, res in zip(found, residuals):
        det = complex(np.linalg.det(hessian_matrix(spec, z)))
        morse = abs(det) > cfg.morse_tol
        points.append(CriticalPoint(
            point=tuple(complex(x) for x in z),
            residual=res,
            hessian_det=det,
            morse=morse,
            multiplicity=1 if morse else None,
        ))
    points.sort(key=lambda c: _sort_key(c.point))
    if expected is not None and len(points) != expected:
        msgs.append(f"found {len(points)} critical points, expected {expected}")
    log.debug("solved %d starts, %d converged, %d distinct", n_starts, converged, len(points))
    return SolveResult(tuple(points), expected, n_starts, converged, tuple(msgs))


def morse_certify(
    spec: SuperpotentialSpec,
    points,
    expected: int | None = None,
    morse_tol: float = 1e-10,
) -> MorseReport:
    flags = []
    for pt in points:
        z = pt.point if isinstance(pt, CriticalPoint) else pt
        det = np.linalg.det(hessian_matrix(spec, z))
        flags.append(bool(abs(det) > morse_tol))
    all_morse = all(flags)
    count_ok = None if expected is None else len(flags) == expected
    return MorseReport(tuple(flags), all_morse, count_ok, all_morse and count_ok is not False)
