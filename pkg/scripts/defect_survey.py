#!/usr/bin/env python3
"""Survey the defect reg(R/I3) - 2*nu3 over random graph families.

Runs one deterministic batch per family, prints a combined histogram table,
and drops per-family exemplar edge lists plus JSON-lines reports under the
output directory. Example:

    python scripts/defect_survey.py --count 200 --seed 1 --jobs 8 --out survey
"""

from __future__ import annotations

import argparse
import os
import sys

from pathideals.harness import BatchSpec, classify_defects, reports_to_jsonl, write_exemplars

SWEEPS = {
    "tree": (4, 13),
    "unicyclic": (4, 11),
    "random": (4, 9),
}


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--count", type=int, default=150, help="instances per family")
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--jobs", type=int, default=1)
    parser.add_argument("--out", default="survey-out")
    args = parser.parse_args()

    os.makedirs(args.out, exist_ok=True)
    any_failed = False
    print(f"{'family':<10} {'n':<7} {'count':<6} defect histogram")
    for family, (n_lo, n_hi) in SWEEPS.items():
        spec = BatchSpec(family=family, n_lo=n_lo, n_hi=n_hi, count=args.count, seed=args.seed)
        summary = classify_defects(spec, jobs=args.jobs)
        histogram = " ".join(f"{d}:{c}" for d, c in sorted(summary.histogram.items()))
        print(f"{family:<10} {n_lo}..{n_hi:<4} {args.count:<6} {histogram}")
        write_exemplars(summary, args.out)
        with open(os.path.join(args.out, f"{family}_reports.jsonl"), "w", encoding="utf-8") as fh:
            fh.write(reports_to_jsonl(summary.reports))
        failed = [r for r in summary.reports if not r.passed]
        if failed:
            any_failed = True
            print(f"  !! {len(failed)} failed checks (see {family}_reports.jsonl)", file=sys.stderr)
    return 1 if any_failed else 0


if __name__ == "__main__":
    sys.exit(main())
