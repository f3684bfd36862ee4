#!/usr/bin/env python3
"""Sweep difficulty bounds and report how the two scores respond.

Splits [0, 1] into equal sub-intervals, generates a batch per interval for
each archetype, and prints the mean sampling and structural difficulty per
batch. Useful for sanity-checking that harder bounds actually produce
structurally harder examples before building a curriculum.

Usage:
  python scripts/difficulty_sweep.py --levels 4 --count 200 --task all
"""

import argparse

from gridforge.metrics import pso_difficulty
from gridforge.rng import DifficultyBounds, TracedRng, derive_seed, rng_difficulty
from gridforge.tasks import ARCHETYPES, generate


def sweep(task_id: str, levels: int, count: int, seed: int) -> list[tuple[str, float, float]]:
    task = ARCHETYPES[task_id]
    rows = []
    for level in range(levels):
        bounds = DifficultyBounds(level / levels, (level + 1) / levels)
        rng_scores = []
        pso_scores = []
        index = 0
        while len(pso_scores) < count and index < 20 * count:
            rng = TracedRng(derive_seed(seed + level, task_id, index))
            attempt = generate(task, rng, bounds)
            index += 1
            if attempt.example is None:
                continue
            rng_scores.append(rng_difficulty(attempt.trace))
            pso_scores.append(pso_difficulty(attempt.example))
        label = f"[{bounds.lo:.2f},{bounds.hi:.2f}]"
        rows.append(
            (label, sum(rng_scores) / len(rng_scores), sum(pso_scores) / len(pso_scores))
        )
    return rows


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--task", default="all", help="task id or 'all'")
    parser.add_argument("--levels", type=int, default=4)
    parser.add_argument("--count", type=int, default=200, help="examples per level")
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    task_ids = list(ARCHETYPES) if args.task == "all" else [args.task]
    for task_id in task_ids:
        if task_id not in ARCHETYPES:
            parser.error(f"unknown task id {task_id!r}")
        print(f"\n{task_id}")
        print(f"  {'bounds':<14}{'mean rng diff':>14}{'mean pso diff':>14}")
        for label, mean_rng, mean_pso in sweep(task_id, args.levels, args.count, args.seed):
            print(f"  {label:<14}{mean_rng:>14.3f}{mean_pso:>14.3f}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
