"""End-to-end analysis of one problem and its JSON/text rendering."""
from __future__ import annotations

import json
import time
from dataclasses import asdict

import numpy as np

from .critsolve import SolverConfig, morse_certify, solve_critical_points
from .fan import FanError, polytope_vertices, validate_fan, wide_variety_2
from .frobenius import (
    euler_class_check,
    point_spectrum,
    quantum_inclusion_report,
    residue_sum,
    semisimplicity_check,
    verify_residue_identities,
)
from .inputs import Problem
from .laurent import LaurentPolynomial
from .invariants import (
    discriminant_hessian,
    discriminant_minorsum,
    discriminant_vector,
    quadform_w1,
    quadform_w2_parametrized,
)

HESSIAN_AGREEMENT_TOL = 1e-8
CATALOG_POINT_TOL = 1e-8

EXIT_OK, EXIT_INPUT, EXIT_CHECK = 0, 1, 2


def _c(z: complex) -> list[float]:
    z = complex(z)
    return [z.real + 0.0, z.imag + 0.0]


def _pt(z) -> list[list[float]]:
    return [_c(x) for x in z]


def _match_points(found, expected) -> float:
    """Largest distance from an expected point to its nearest found point."""
    if len(found) != len(expected):
        return float("inf")
    worst = 0.0
    for e in expected:
        worst = max(worst, min(float(np.max(np.abs(np.array(f) - np.array(e)))) for f in found))
    return worst


def analyze(problem: Problem, cfg: SolverConfig | None = None, tol: float = 1e-9,
            timing: bool = False) -> tuple[dict, int]:
    """Run the full pipeline; returns ``(report, exit_code)``."""
    cfg = cfg or SolverConfig()
    t0 = time.perf_counter()
    spec, fan = problem.spec, problem.fan
    checks: list[dict] = []

    def check(name: str, passed: bool, detail: str = "") -> None:
        checks.append({"name": name, "passed": bool(passed), "detail": detail})

    report: dict = {
        "input": {"name": problem.name, "source": problem.source, "dim": spec.dim,
                  "vectors": [list(v) for v in fan.vectors] if fan else None,
                  "labels": list(fan.labels) if fan else None,
                  "terms": [{"coeff": _c(w), "exponents": list(e)} for w, e in spec.terms]},
        "tolerances": {"check": tol, "newton": cfg.newton_tol, "dedupe": cfg.dedupe_tol,
                       "morse": cfg.morse_tol, "hessian_agreement": HESSIAN_AGREEMENT_TOL},
        "solver": {"seed": cfg.seed, "starts": None},
        "superpotential": str(spec.polynomial),
    }

    expected = problem.expected
    if fan is not None:
        try:
            v = validate_fan(fan)
        except FanError as exc:
            report["error"] = f"fan: {exc}"
            return report, EXIT_INPUT
        facts = polytope_vertices(fan)
        if expected is None:
            expected = len(facts.vertices)
        w2 = wide_variety_2(fan)
        phi2, delta2 = quadform_w2_parametrized(fan)
        report["fan"] = {"validation": asdict(v), "vertices": [list(x) for x in facts.vertices],
                         "incidence": [sorted(s) for s in facts.incidence]}
        report["w2"] = {
            "basis": [[str(x) for x in b] for b in w2.basis],
            "coordinates": [str(c) for c in w2.coordinates],
            "nonzero_constraints": [str(c) for c in w2.constraints],
            "quadratic_form": str(phi2),
            "discriminant": str(delta2),
        }
    report["expected_count"] = expected

    result = solve_critical_points(spec, cfg, expected)
    report["solver"]["starts"] = result.starts
    report["solver"]["converged_starts"] = result.converged_starts
    report["solver"]["warnings"] = list(result.warnings)
    pts = result.points
    report["critical_points"] = [
        {"z": _pt(p.point), "residual": p.residual, "hessian_det": _c(p.hessian_det),
         "morse": p.morse, "multiplicity": p.multiplicity if p.morse else "unknown"}
        for p in pts
    ]
    report["found_count"] = len(pts)
    if expected is not None:
        check("critical_count", len(pts) == expected, f"{len(pts)} found, {expected} expected")
    check("residuals", all(p.residual < cfg.newton_tol for p in pts),
          f"max residual {max((p.residual for p in pts), default=0.0):.3g}")
    morse = morse_certify(spec, pts, expected, cfg.morse_tol)
    report["morse"] = {"all_points": morse.all_morse, "count_matches": morse.count_matches,
                       "morse": morse.morse}

    entry = problem.entry
    if entry is not None:
        dist = _match_points([p.point for p in pts], entry.expected_points())
        check("catalog_points", dist < CATALOG_POINT_TOL, f"max distance {dist:.3g}")

    qf = quadform_w1(spec)
    deltas = []
    for p in pts:
        z = p.point
        dv = discriminant_vector(spec, z)
        dh = discriminant_hessian(spec, z)
        row = {"z": _pt(z), "vector": _c(dv), "hessian": _c(dh), "hessian_err": abs(dh - dv),
               "quadratic_form": {f"X{i + 1}X{j + 1}": _c(c) for (i, j), c in qf.form_coefficients(z).items()}}
        if fan is not None and spec.unit_weights:
            dm = discriminant_minorsum(fan, z)
            row["minorsum"] = _c(dm)
            row["minorsum_err"] = abs(dm - dv) / (1 + abs(dv))
        if entry is not None:
            dc = entry.expected_delta(z)
            row["catalog"] = _c(dc)
            row["catalog_err"] = abs(dc - dv)
        deltas.append(row)
    report["discriminants"] = deltas
    if entry is not None:
        report["discriminant_formula"] = entry.delta_text
    check("delta_hessian_agreement", all(r["hessian_err"] < HESSIAN_AGREEMENT_TOL for r in deltas))
    if any("minorsum" in r for r in deltas):
        check("delta_minorsum_agreement", all(r["minorsum_err"] < tol for r in deltas))
    if entry is not None:
        check("delta_catalog_formula", all(r["catalog_err"] < tol for r in deltas))

    spectrum = point_spectrum(spec, pts)
    verdict = semisimplicity_check(spectrum, expected)
    report["semisimplicity"] = asdict(verdict)
    check("semisimple", verdict.semisimple, verdict.verdict)

    if verdict.semisimple and fan is not None and spec.unit_weights:
        rows = verify_residue_identities(fan, spectrum, tol)
        report["residue_identities"] = {"applicable": True, "rows": [
            {"facets": [fan.labels[i] for i in r.facets], "indices": list(r.facets),
             "monomial": list(r.exponent), "computed": _c(r.computed), "expected": r.expected,
             "passed": r.passed} for r in rows]}
        check("residue_identities", all(r.passed for r in rows), f"{sum(r.passed for r in rows)}/{len(rows)} rows")
    else:
        report["residue_identities"] = {"applicable": False,
                                        "reason": "not applicable (non-toric or not semisimple)"}

    if verdict.semisimple and entry is not None and entry.residue_identities:
        reference = []
        for ident in entry.residue_identities:
            s = residue_sum(spectrum, LaurentPolynomial.monomial(ident.exponent))
            reference.append({"a": ident.label, "computed": _c(s), "expected": ident.expected,
                            "passed": abs(s - ident.expected) < tol})
        report["reference_identities"] = reference
        check("reference_identities", all(r["passed"] for r in reference))

    if verdict.semisimple and problem.classes is not None:
        eu = euler_class_check(problem.classes, spectrum, HESSIAN_AGREEMENT_TOL)
        report["euler_class"] = {"applicable": True, "t_power_ok": eu.t_power_ok,
                                 "t_power_errors": list(eu.t_power_errors),
                                 "points": [{"z": _pt(p.point), "value": _c(p.value), "expected": _c(p.expected),
                                             "error": p.error, "passed": p.passed} for p in eu.points]}
        check("euler_class", eu.passed)
        incl = quantum_inclusion_report(problem.classes, spectrum)
        report["quantum_inclusion"] = [
            {"z": _pt(z), "coefficients": {lab: {"value": _c(v), "t_power": tp} for lab, (v, tp) in row.items()}}
            for z, row in zip(spectrum.points, incl)
        ]
    else:
        report["euler_class"] = {"applicable": False, "reason": "not applicable (no class data)"}

    report["checks"] = checks
    report["passed"] = all(c["passed"] for c in checks)
    if timing:
        report["timing_seconds"] = time.perf_counter() - t0
    return report, EXIT_OK if report["passed"] else EXIT_CHECK


def to_json(report: dict) -> str:
    return json.dumps(report, indent=2, sort_keys=False)


def to_text(report: dict) -> str:
    """Indented plain-text rendering carrying the same values as the JSON."""
    lines: list[str] = []

    def scalar(x) -> str:
        if isinstance(x, list) and len(x) == 2 and all(isinstance(v, float) for v in x):
            return f"{x[0]!r}{x[1]:+}j"
        return json.dumps(x) if not isinstance(x, str) else x

    def walk(obj, indent: int) -> None:
        pad = "  " * indent
        if isinstance(obj, dict):
            for k, v in obj.items():
                if isinstance(v, (dict, list)) and v and not _is_leaf(v):
                    lines.append(f"{pad}{k}:")
                    walk(v, indent + 1)
                else:
                    lines.append(f"{pad}{k}: {_leaf(v, scalar)}")
        else:
            for item in obj:
                if isinstance(item, (dict, list)) and not _is_leaf(item):
                    lines.append(f"{pad}-")
                    walk(item, indent + 1)
                else:
                    lines.append(f"{pad}- {_leaf(item, scalar)}")

    walk(report, 0)
    return "\n".join(lines)


def _is_leaf(v) -> bool:
    if isinstance(v, list):
        return all(not isinstance(x, (dict, list)) for x in v) or all(
            isinstance(x, list) and len(x) == 2 and all(isinstance(y, float) for y in x) for x in v
        )
    return not isinstance(v, dict)


def _leaf(v, scalar) -> str:
    if isinstance(v, list):
        if len(v) == 2 and all(isinstance(x, float) for x in v):
            return scalar(v)
        return "[" + ", ".join(scalar(x) for x in v) + "]"
    return scalar(v)
