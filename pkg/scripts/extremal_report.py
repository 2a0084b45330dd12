#!/usr/bin/env python3
"""Build the chained-clique constructions for k = 2..4, verify the claimed
properties with the exact oracles, and emit spectrum reports.

Usage: python scripts/extremal_report.py [--outdir OUT]
Writes <outdir>/extremal_k<k>.json and .csv; prints a summary table.
"""

import argparse
import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from pancyclic.core import AnalysisParams, validate_cycle
from pancyclic.generators import ExtremalSpec
from pancyclic.oracles import cycle_of_length, independence_number
from pancyclic.spectrum import full_certificate


def check_k(k: int, outdir: Path) -> dict:
    t0 = time.monotonic()
    spec = ExtremalSpec(k)
    g = spec.graph()
    alpha, _ = independence_number(g)
    ham = spec.hamilton_cycle()
    assert validate_cycle(g, ham)

    missing = 2 * k - 1
    witness_ok = all(
        spec.cycle_witness(ell) is not None
        and validate_cycle(g, spec.cycle_witness(ell))
        for ell in sorted(spec.present_lengths())
    )
    # re-prove the hole by exhaustion where the subset space is affordable
    hole_absent = None
    if k <= 4 and 3 <= missing <= g.n:
        hole_absent = cycle_of_length(g, missing) is None

    report = full_certificate(g, AnalysisParams(k=k, eps=0.5), ham=ham)
    out_json = outdir / f"extremal_k{k}.json"
    out_json.write_text(report.to_json() + "\n")
    out_csv = outdir / f"extremal_k{k}.csv"
    with out_csv.open("w") as fh:
        fh.write("length,status\n")
        for ell in range(3, g.n + 1):
            fh.write(f"{ell},{report.status_of(ell)}\n")

    return {
        "k": k,
        "n": g.n,
        "m": g.m,
        "alpha": alpha,
        "hamiltonian": True,
        "missing_length": missing,
        "hole_absent": hole_absent,
        "constructed_witnesses_ok": witness_ok,
        "report_absent": sorted(report.absent_set()),
        "report_unknown": sorted(report.unknown_set()),
        "seconds": time.monotonic() - t0,
    }


def main() -> int:
    parser = argparse.ArgumentParser()
    parser.add_argument("--outdir", default="out")
    parser.add_argument("--kmax", type=int, default=4)
    args = parser.parse_args()
    outdir = Path(args.outdir)
    outdir.mkdir(parents=True, exist_ok=True)

    print(f"{'k':>3} {'n':>4} {'m':>5} {'alpha':>5} {'hole':>5} "
          f"{'hole absent':>12} {'witnesses':>10} {'unknown':>8} {'time':>7}")
    for k in range(2, args.kmax + 1):
        row = check_k(k, outdir)
        hole = "yes" if row["hole_absent"] else (
            "-" if row["hole_absent"] is None else "NO!"
        )
        wit = "ok" if row["constructed_witnesses_ok"] else "BAD"
        print(
            f"{row['k']:>3} {row['n']:>4} {row['m']:>5} {row['alpha']:>5} "
            f"{row['missing_length']:>5} {hole:>12} {wit:>10} "
            f"{len(row['report_unknown']):>8} {row['seconds']:>6.1f}s"
        )
    print(f"\nreports written to {outdir}/")
    return 0


if __name__ == "__main__":
    sys.exit(main())
