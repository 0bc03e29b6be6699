"""Run the full pipeline on every catalog example and print a summary table.

    python3 scripts/reproduce_examples.py [--seed 42] [--json-dir out/]
"""
import argparse
from pathlib import Path

from widevar.catalog import NAMES
from widevar.critsolve import SolverConfig
from widevar.inputs import problem_from_catalog
from widevar.report import analyze, to_json


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--seed", type=int, default=42)
    ap.add_argument("--json-dir", type=Path, default=None, help="write one report per example here")
    args = ap.parse_args()

    print(f"{'example':10s} {'found':>5s} {'exp':>4s} {'max|dH-dV|':>11s} {'residues':>9s} {'euler':>6s}  status")
    failed = 0
    for name in NAMES:
        rep, code = analyze(problem_from_catalog(name), SolverConfig(seed=args.seed), timing=True)
        errs = [d["hessian_err"] for d in rep["discriminants"]]
        res = rep["residue_identities"]
        res_s = f"{sum(r['passed'] for r in res['rows'])}/{len(res['rows'])}" if res["applicable"] else "n/a"
        eu = rep["euler_class"]
        eu_s = ("ok" if all(p["passed"] for p in eu["points"]) else "FAIL") if eu["applicable"] else "n/a"
        status = "PASS" if code == 0 else "FAIL"
        failed += code != 0
        print(f"{name:10s} {rep['found_count']:5d} {rep['expected_count']:4d} {max(errs):11.2e} {res_s:>9s} {eu_s:>6s}"
              f"  {status}  ({rep['timing_seconds']:.2f}s)")
        if args.json_dir:
            args.json_dir.mkdir(parents=True, exist_ok=True)
            rep.pop("timing_seconds")
            (args.json_dir / f"{name}.json").write_text(to_json(rep))
    return 1 if failed else 0


if __name__ == "__main__":
    raise SystemExit(main())
