#!/usr/bin/env python3
"""Measure verified-unique-example throughput for every archetype.

Prints a per-archetype table plus the median, and optionally dumps the raw
numbers as JSON for tracking across machines.

Usage:
  python scripts/bench_throughput.py --seconds 5 --seed 0 [--json out.json]
"""

import argparse
import json

from gridforge.pipeline import bench_archetype
from gridforge.tasks import ARCHETYPES


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--seconds", type=float, default=5.0, help="window per archetype")
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--json", default=None, help="optional JSON output path")
    args = parser.parse_args()

    results = []
    print(f"{'task':<20}{'accepted':>9}{'attempts':>9}{'ex/s':>10}")
    for task_id in ARCHETYPES:
        r = bench_archetype(task_id, args.seconds, master_seed=args.seed)
        results.append(r)
        print(f"{task_id:<20}{r.accepted:>9}{r.attempts:>9}{r.throughput:>10.1f}")

    ordered = sorted(r.throughput for r in results)
    mid = len(ordered) // 2
    median = ordered[mid] if len(ordered) % 2 else (ordered[mid - 1] + ordered[mid]) / 2
    print(f"\nmedian: {median:.1f} examples/sec   min: {ordered[0]:.1f}   max: {ordered[-1]:.1f}")

    if args.json:
        payload = {
            "seconds": args.seconds,
            "seed": args.seed,
            "median": median,
            "tasks": {
                r.task_id: {
                    "accepted": r.accepted,
                    "attempts": r.attempts,
                    "throughput": r.throughput,
                }
                for r in results
            },
        }
        with open(args.json, "w", encoding="utf-8") as fh:
            json.dump(payload, fh, indent=2)
        print(f"wrote {args.json}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
