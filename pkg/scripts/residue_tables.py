"""Residue sums sum_z z^a / Delta(z) for the blow-up examples.

Prints each reference identity in two conventions: divided by Delta (the form
the verifier uses) and divided by -Delta, in which the nonzero values read +1.
"""
import argparse

from widevar.catalog import catalog
from widevar.critsolve import solve_critical_points
from widevar.frobenius import point_spectrum, residue_sum
from widevar.laurent import LaurentPolynomial


def table(name: str) -> None:
    e = catalog(name)
    pts = solve_critical_points(e.spec, expected=e.expected_count).points
    sp = point_spectrum(e.spec, pts)
    print(f"\n{e.title}  (Delta = {e.delta_text}, {len(pts)} points)")
    print(f"  {'a(z)':16s} {'sum a/Delta':>24s} {'sum a/(-Delta)':>24s} expected")
    for ident in e.residue_identities:
        s = residue_sum(sp, LaurentPolynomial.monomial(ident.exponent))
        print(f"  {ident.label:16s} {s.real:+24.15f} {-s.real:+24.15f} {ident.expected:+d}  |Im|={abs(s.imag):.1e}")


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("names", nargs="*", default=["bl1", "bl2", "bl3"])
    for name in ap.parse_args().names:
        table(name)


if __name__ == "__main__":
    main()
