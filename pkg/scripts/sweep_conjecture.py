#!/usr/bin/env python3
"""Exhaustive sweep over subgroup conjugacy classes of S_n for n = 1..5,
checking that every quotient edge poset E(B_n/G) is Peck.

Writes one JSONL file per n under the output directory and prints a summary
table.  Any failure would print a counterexample banner and exit nonzero.
"""

import argparse
import json
import pathlib
import sys
import time

from edgeposets.cli import sweep_records


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-n", type=int, default=5)
    ap.add_argument("--jobs", type=int, default=1)
    ap.add_argument("--outdir", default="sweep_results")
    args = ap.parse_args()

    outdir = pathlib.Path(args.outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    failures = 0
    for n in range(1, args.max_n + 1):
        t0 = time.perf_counter()
        records = sweep_records(n, jobs=args.jobs)
        path = outdir / f"sweep_n{n}.jsonl"
        with open(path, "w") as fh:
            for rec in records:
                fh.write(json.dumps(rec.to_dict()) + "\n")
        bad = [r for r in records if not r.peck_quotient_edge["peck"]]
        failures += len(bad)
        cct = sum(1 for r in records if r.cct)
        print(
            f"n={n}: {len(records):3d} classes, {cct:3d} CCT, "
            f"{len(bad)} Peck failures, {time.perf_counter() - t0:6.2f}s -> {path}"
        )
        for r in bad:
            print(f"  COUNTEREXAMPLE: {r.group} (order {r.order})")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
