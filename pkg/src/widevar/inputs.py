"""Loading problems from the built-in catalog or from fan JSON files.

File layout::

    {"name": str, "dim": int,
     "vectors": [[int, ...], ...], "labels": [str, ...],
     "terms": [{"coeff": [re, im] | number, "exponents": [int, ...]}, ...],
     "classes": [{"label": str, "value_terms": [...], "t_power": int}, ...],
     "dual_pairs": [["pt", "M"], ["E", "E", -1], ...],
     "expected": int}

``terms`` overrides ``vectors`` as the superpotential source; without
``vectors`` the polytope-dependent steps are skipped.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

from .catalog import CatalogEntry, catalog
from .fan import FanData, FanError, SuperpotentialSpec, build_superpotential, general_superpotential
from .frobenius import ClassDictionary, ClassValue
from .laurent import LaurentPolynomial


class InputError(ValueError):
    pass


@dataclass(frozen=True)
class Problem:
    name: str
    spec: SuperpotentialSpec
    fan: FanData | None
    classes: ClassDictionary | None
    expected: int | None
    entry: CatalogEntry | None = None
    source: str = "example"


def _coeff(raw) -> complex:
    if isinstance(raw, (list, tuple)):
        if len(raw) != 2:
            raise InputError(f"complex coefficient must be [re, im], got {raw!r}")
        return complex(float(raw[0]), float(raw[1]))
    if isinstance(raw, (int, float)):
        return complex(raw)
    raise InputError(f"bad coefficient {raw!r}")


def _terms(raw, where: str) -> list[tuple[complex, tuple[int, ...]]]:
    try:
        return [(_coeff(t["coeff"]), tuple(int(x) for x in t["exponents"])) for t in raw]
    except (KeyError, TypeError) as exc:
        raise InputError(f"{where}: each term needs 'coeff' and 'exponents'") from exc


def problem_from_dict(data: dict, name: str | None = None) -> Problem:
    name = data.get("name") or name or "input"
    dim = data.get("dim")
    fan = None
    try:
        if data.get("vectors") is not None:
            fan = FanData(tuple(tuple(v) for v in data["vectors"]), tuple(data.get("labels") or ()), name)
            if dim is not None and fan.dim != dim:
                raise InputError(f"fan: vectors have length {fan.dim}, dim says {dim}")
        if data.get("terms"):
            spec = general_superpotential(_terms(data["terms"], "terms"), dim)
        elif fan is not None:
            spec = build_superpotential(fan)
        else:
            raise InputError("input needs 'vectors' or 'terms'")
    except FanError as exc:
        raise InputError(f"fan: {exc}") from exc

    classes = None
    if data.get("classes"):
        entries = {}
        for c in data["classes"]:
            poly = LaurentPolynomial(spec.dim, [(e, w) for w, e in _terms(c["value_terms"], "classes")])
            entries[c["label"]] = ClassValue(poly, int(c.get("t_power", 0)))
        try:
            classes = ClassDictionary(entries, tuple(tuple(p) for p in data.get("dual_pairs", ())))
        except KeyError as exc:
            raise InputError(f"frobenius: {exc.args[0]}") from exc
    expected = data.get("expected")
    return Problem(name, spec, fan, classes, int(expected) if expected is not None else None, source="file")


def load_problem(path: str | Path) -> Problem:
    path = Path(path)
    try:
        data = json.loads(path.read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc
    return problem_from_dict(data, path.stem)


def problem_from_catalog(name: str) -> Problem:
    try:
        entry = catalog(name)
    except KeyError as exc:
        raise InputError(str(exc.args[0])) from exc
    return Problem(entry.name, entry.spec, entry.fan, entry.classes, entry.expected_count, entry, "example")


def problem_to_dict(p: Problem) -> dict:
    """Inverse of :func:`problem_from_dict` (classes included)."""
    out: dict = {"name": p.name, "dim": p.spec.dim}
    if p.fan is not None:
        out["vectors"] = [list(v) for v in p.fan.vectors]
        out["labels"] = list(p.fan.labels)
    if p.fan is None or not p.spec.unit_weights:
        out["terms"] = [{"coeff": [w.real, w.imag], "exponents": list(e)} for w, e in p.spec.terms]
    if p.classes is not None:
        out["classes"] = [
            {
                "label": lab,
                "value_terms": [{"coeff": [c.real, c.imag], "exponents": list(e)} for e, c in cv.value.terms],
                "t_power": cv.t_power,
            }
            for lab, cv in p.classes.entries.items()
        ]
        out["dual_pairs"] = [list(pair) for pair in p.classes.dual_pairs]
    if p.expected is not None:
        out["expected"] = p.expected
    return out
