"""Built-in examples: projective spaces, the monotone toric surfaces and the
Chekanov torus, with closed forms for their critical sets and discriminants.

Blow-up normals are ordered so that the first ``r - n`` coordinates
parametrize the linear wide variety and the facet labels match the class data.
"""
from __future__ import annotations

from collections.abc import Callable
from dataclasses import dataclass, field

import numpy as np

from .fan import FanData, SuperpotentialSpec, build_superpotential, general_superpotential
from .frobenius import ClassDictionary, ClassValue
from .laurent import LaurentPolynomial, parse_polynomial

OMEGA = np.exp(2j * np.pi / 3)


@dataclass(frozen=True)
class ResidueIdentity:
    """A reference identity ``sum_z a(z)/Delta(z) = expected`` over the critical set."""

    label: str
    exponent: tuple[int, ...]
    expected: int


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    title: str
    spec: SuperpotentialSpec
    expected_count: int
    expected_points: Callable[[], list[tuple[complex, ...]]]
    expected_delta: Callable[[tuple[complex, ...]], complex]
    delta_text: str
    provenance: str
    fan: FanData | None = None
    classes: ClassDictionary | None = None
    residue_identities: tuple[ResidueIdentity, ...] = ()
    notes: tuple[str, ...] = field(default=())


def _classes(dim: int, values: dict[str, tuple[str, int]], pairs) -> ClassDictionary:
    entries = {lab: ClassValue(parse_polynomial(txt, dim), tp) for lab, (txt, tp) in values.items()}
    return ClassDictionary(entries, tuple(pairs))


def _cpn(n: int) -> CatalogEntry:
    vecs = [tuple(int(i == j) for j in range(n)) for i in range(n)] + [(-1,) * n]
    labels = [f"x{i + 1}=0" for i in range(n)] + ["sum=1"]
    fan = FanData(tuple(vecs), tuple(labels), f"cp{n}")
    values = {}
    for l in range(n + 1):
        txt = "1" if l == n else (f"z1^{n - l}" if n - l > 1 else "z1")
        values[f"CP{l}"] = (txt, n - l)
    pairs = [(f"CP{l}", f"CP{n - l}") for l in range(n + 1)]
    roots = [np.exp(2j * np.pi * k / (n + 1)) for k in range(n + 1)]
    return CatalogEntry(
        name=f"cp{n}",
        title=f"CP^{n}, Clifford torus",
        spec=build_superpotential(fan),
        fan=fan,
        expected_count=n + 1,
        expected_points=lambda: [(z,) * n for z in roots],
        expected_delta=lambda z: (-1) ** (n + 1) * (n + 1) * z[0] ** n,
        delta_text=f"(-1)^{n + 1} ({n + 1}) z^{n}",
        provenance="projective space example: W1 = {(z,...,z) : z^(n+1) = 1}",
        classes=_classes(n, values, pairs),
        notes=("[CP^l] maps to z^(n-l) t^(n-l); CP0 is the point class",),
    )


def _s2xs2() -> CatalogEntry:
    fan = FanData(((1, 0), (0, 1), (-1, 0), (0, -1)), ("x1=0", "x2=0", "x1=1", "x2=1"), "s2xs2")
    values = {"pt": ("1 * z1 z2", 2), "A": ("z2", 1), "B": ("z1", 1), "M": ("1", 0)}
    pairs = [("pt", "M"), ("A", "B"), ("B", "A"), ("M", "pt")]
    return CatalogEntry(
        name="s2xs2",
        title="S^2 x S^2, product of equators",
        spec=build_superpotential(fan),
        fan=fan,
        expected_count=4,
        expected_points=lambda: [(1, 1), (1, -1), (-1, 1), (-1, -1)],
        expected_delta=lambda z: -4 * z[0] * z[1],
        delta_text="-4 z1 z2",
        provenance="S^2 x S^2 example",
        classes=_classes(2, values, pairs),
    )


def _bl1() -> CatalogEntry:
    fan = FanData(((1, 1), (1, 0), (-1, -1), (0, 1)), ("E", "L-E", "L", "L-E"), "bl1")
    values = {
        "pt": ("z1^-2 z2^-2 + -1", 2),
        "L": ("z1^-1 z2^-1", 1),
        "E": ("z1 z2", 1),
        "M": ("1", 0),
    }
    pairs = [("pt", "M"), ("L", "L"), ("E", "E", -1), ("M", "pt")]

    def points():
        return [(z, z) for z in np.roots([1, 1, 0, 0, -1])]

    # expected values use Delta as denominator; against 4z^3 + 3z^2 = -Delta
    # the nonzero sums read +1
    ids = [ResidueIdentity(f"z^{k}", (k, 0), 0) for k in (0, 1, 2, -2)]
    ids += [ResidueIdentity(f"z^{k}", (k, 0), -1) for k in (3, -1)]
    return CatalogEntry(
        name="bl1",
        title="CP^2 blown up at one point",
        spec=build_superpotential(fan),
        fan=fan,
        expected_count=4,
        expected_points=points,
        expected_delta=lambda z: -z[0] ** 2 * (4 * z[0] + 3),
        delta_text="-z^2 (4z + 3)",
        provenance="one-point blow-up example: W1 = {(z,z) : z^4 + z^3 - 1 = 0}",
        classes=_classes(2, values, pairs),
        residue_identities=tuple(ids),
        notes=("with the denominator 4z^3+3z^2 = -Delta the nonzero sums read +1",),
    )


def _bl2() -> CatalogEntry:
    fan = FanData(((0, 1), (-1, -1), (0, -1), (1, 0), (1, 1)),
                  ("L-E1", "L-E2", "E2", "L-E1-E2", "E1"), "bl2")
    values = {
        "pt": ("1 + z2 + -1 * z2^-2", 2),
        "L": ("z1 z2 + z2", 1),
        "E1": ("z1 z2", 1),
        "E2": ("z2^-1", 1),
        "M": ("1", 0),
    }
    pairs = [("pt", "M"), ("L", "L"), ("E1", "E1", -1), ("E2", "E2", -1), ("M", "pt")]

    def points():
        s5 = np.sqrt(5)
        pts = [(-1, (-1 + s5) / 2), (-1, (-1 - s5) / 2)]
        return pts + [(z ** -2, z) for z in np.roots([1, 0, -1, -1])]

    zero = [(0, 0), (1, 0), (0, 1), (1, 1), (0, -1), (-1, -1)]
    minus = [(-1, 0), (2, 1), (1, 2), (1, -1), (-1, -2)]
    ids = [ResidueIdentity(_mono(e), e, 0) for e in zero] + [ResidueIdentity(_mono(e), e, -1) for e in minus]
    return CatalogEntry(
        name="bl2",
        title="CP^2 blown up at two points",
        spec=build_superpotential(fan),
        fan=fan,
        expected_count=5,
        expected_points=points,
        expected_delta=lambda z: (z[1] - 1 / z[1]) ** 2 - 4 / z[0],
        delta_text="(z2 - 1/z2)^2 - 4/z1",
        provenance="two-point blow-up example",
        classes=_classes(2, values, pairs),
        residue_identities=tuple(ids),
        notes=("I([pt]) carries t^2, as the t-degree audit requires",),
    )


def _bl3() -> CatalogEntry:
    fan = FanData(((0, 1), (-1, 0), (-1, -1), (0, -1), (1, 0), (1, 1)),
                  ("L-E1-E2", "E2", "L-E2-E3", "E3", "L-E1-E3", "E1"), "bl3")
    values = {
        "pt": ("1 + z1 + z2 + z1 z2 + -1 * z1^2 z2^2", 2),
        "L": ("z2 + z1 z2 + z1^-1", 1),
        "E1": ("z1 z2", 1),
        "E2": ("z1^-1", 1),
        "E3": ("z2^-1", 1),
        "M": ("1", 0),
    }
    pairs = [("pt", "M"), ("L", "L"), ("E1", "E1", -1), ("E2", "E2", -1), ("E3", "E3", -1), ("M", "pt")]
    zero = [(0, 0), (1, 0), (0, 1), (1, 1), (-1, 0), (0, -1), (-1, -1)]
    minus = [(-1, 1), (1, -1), (-2, -1), (-1, -2), (2, 1), (1, 2)]
    ids = [ResidueIdentity(_mono(e), e, 0) for e in zero] + [ResidueIdentity(_mono(e), e, -1) for e in minus]
    return CatalogEntry(
        name="bl3",
        title="CP^2 blown up at three points",
        spec=build_superpotential(fan),
        fan=fan,
        expected_count=6,
        expected_points=lambda: [(1, 1), (1, -1), (-1, 1), (-1, -1), (OMEGA, OMEGA), (OMEGA ** 2, OMEGA ** 2)],
        expected_delta=lambda z: (z[1] - 1 / z[1]) ** 2 - 4 / z[0] * (1 + z[1] + z[0] * z[1]),
        delta_text="(z2 - 1/z2)^2 - (4/z1)(1 + z2 + z1 z2)",
        provenance="three-point blow-up example",
        classes=_classes(2, values, pairs),
        residue_identities=tuple(ids),
        notes=("z1^-2 z2^-1 sums to -1: its facets meet at a vertex",),
    )


def _chekanov() -> CatalogEntry:
    spec = general_superpotential([(2, (0, -2)), (1, (1, -2)), (1, (-1, -2)), (1, (0, 1))])
    return CatalogEntry(
        name="chekanov",
        title="Chekanov torus in CP^2 (coordinates z_a, z_b)",
        spec=spec,
        expected_count=3,
        expected_points=lambda: [(1, 2 * OMEGA ** k) for k in range(3)],
        expected_delta=lambda z: -6 / z[1],
        delta_text="-6 / z_b",
        provenance="Chekanov torus example, Maslov-2 classes with weights 2, 1, 1, 1",
        notes=(
            "non-toric: residue identities and class data do not apply",
            "expanded form has coefficient 12 z_b^-2 on X2 (b) and z_b^-2 on X1 (a)",
        ),
    )


def _mono(e: tuple[int, int]) -> str:
    return str(LaurentPolynomial.monomial(e))


_BUILDERS = {
    "cp2": lambda: _cpn(2),
    "cp3": lambda: _cpn(3),
    "cp4": lambda: _cpn(4),
    "s2xs2": _s2xs2,
    "bl1": _bl1,
    "bl2": _bl2,
    "bl3": _bl3,
    "chekanov": _chekanov,
}

NAMES = tuple(_BUILDERS)


def catalog(name: str | None = None):
    """All entries as a dict, or a single entry by name."""
    if name is None:
        return {k: b() for k, b in _BUILDERS.items()}
    try:
        return _BUILDERS[name]()
    except KeyError:
        raise KeyError(f"unknown example {name!r}; choose from {', '.join(NAMES)}") from None
