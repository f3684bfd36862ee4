"""Command-line interface.

Subcommands: list, generate, verify, band, bench, render. The default seed
comes from the GRIDFORGE_SEED environment variable; an explicit --seed
always wins.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .grid import Example, Grid
from .pipeline import (
    RunConfig,
    band_by_difficulty,
    bench_archetype,
    run_generation,
    write_jsonl,
)
from .rng import DifficultyBounds
from .tasks import ARCHETYPES, VerificationError, verify

SEED_ENV_VAR = "GRIDFORGE_SEED"


class CliError(Exception):
    """User-facing configuration error; message printed, exit code 1."""


def _resolve_seed(args) -> int:
    if args.seed is not None:
        return args.seed
    env = os.environ.get(SEED_ENV_VAR)
    if env is not None:
        try:
            return int(env)
        except ValueError:
            raise CliError(f"{SEED_ENV_VAR} must be a decimal integer, got {env!r}")
    return 0


def _resolve_bounds(args) -> DifficultyBounds:
    if args.diff_lb > args.diff_ub:
        raise CliError(
            f"invalid difficulty bounds: lower bound {args.diff_lb} exceeds upper bound {args.diff_ub}"
        )
    try:
        return DifficultyBounds(args.diff_lb, args.diff_ub)
    except ValueError as exc:
        raise CliError(f"invalid difficulty bounds: {exc}")


def _resolve_tasks(spec: str) -> list[str]:
    if spec == "all":
        return list(ARCHETYPES)
    task_ids = [t.strip() for t in spec.split(",") if t.strip()]
    for task_id in task_ids:
        if task_id not in ARCHETYPES:
            raise CliError(
                f"unknown task id {task_id!r}; run 'gridforge list' for available tasks"
            )
    if not task_ids:
        raise CliError("no task ids given")
    return task_ids


def _check_writable(path: str) -> None:
    try:
        with open(path, "w", encoding="utf-8"):
            pass
    except OSError as exc:
        raise CliError(f"cannot write output path {path!r}: {exc}")


def _print_stats(stats_by_task) -> None:
    header = f"{'task':<20}{'accepted':>9}{'attempts':>9}{'genfail':>8}{'reject':>7}{'dup':>6}{'ex/s':>9}"
    print(header)
    for stats in stats_by_task.values():
        line = (
            f"{stats.task_id:<20}{stats.accepted:>9}{stats.attempts:>9}"
            f"{stats.generator_failures:>8}{stats.verifier_rejections:>7}"
            f"{stats.duplicates:>6}{stats.throughput:>9.1f}"
        )
        if stats.shortfall:
            line += "  SHORTFALL"
        print(line)


def cmd_list(args) -> int:
    for task in ARCHETYPES.values():
        print(f"{task.id:<20} min dims {task.min_height}x{task.min_width:<3} {task.description}")
        print(f"{'':<20} difficulty-pruned draws: {', '.join(task.dof)}")
    return 0


def cmd_generate(args) -> int:
    task_ids = _resolve_tasks(args.task)
    bounds = _resolve_bounds(args)
    seed = _resolve_seed(args)
    _check_writable(args.out)
    cfg = RunConfig(
        task_ids=tuple(task_ids),
        count=args.count,
        bounds=bounds,
        master_seed=seed,
        max_attempts=args.max_attempts,
        workers=args.workers,
        output_path=args.out,
        format=args.format,
    )
    records, stats_by_task = run_generation(cfg)
    _print_stats(stats_by_task)
    print(f"wrote {len(records)} records to {args.out}")
    return 0


def _load_examples(path: str) -> list[tuple[str | None, Example]]:
    """Read (task, example) pairs from JSONL or ARC-style JSON files."""
    pairs: list[tuple[str | None, Example]] = []

    def to_example(item) -> Example:
        return Example(Grid.from_rows(item["input"]), Grid.from_rows(item["output"]))

    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise CliError(f"cannot read example file {path!r}: {exc}")
    text = text.strip()
    if not text:
        raise CliError(f"example file {path!r} is empty")
    try:
        data = json.loads(text)
    except json.JSONDecodeError:
        data = None  # not a single document: treat as JSONL
    if data is None:
        for line in text.splitlines():
            line = line.strip()
            if line:
                record = json.loads(line)
                pairs.append((record.get("task"), to_example(record)))
    elif isinstance(data, dict) and "input" in data and "output" in data:
        pairs.append((data.get("task"), to_example(data)))
    elif isinstance(data, dict):
        for task_id, items in data.items():
            pairs.extend((task_id, to_example(item)) for item in items)
    elif isinstance(data, list):
        pairs.extend((item.get("task"), to_example(item)) for item in data)
    else:
        raise CliError(f"unrecognized example file layout in {path!r}")
    return pairs


def cmd_verify(args) -> int:
    if args.task not in ARCHETYPES:
        raise CliError(
            f"unknown task id {args.task!r}; run 'gridforge list' for available tasks"
        )
    task = ARCHETYPES[args.task]
    failures = 0
    for i, (_, example) in enumerate(_load_examples(args.file)):
        try:
            expected = verify(task, example.input)
        except VerificationError as exc:
            print(f"example {i}: FAIL (invalid input: {exc})")
            failures += 1
            continue
        if expected == example.output:
            print(f"example {i}: PASS")
        else:
            print(f"example {i}: FAIL (output mismatch)")
            failures += 1
    if failures:
        print(f"{failures} example(s) failed verification")
        return 1
    print("all examples verified")
    return 0


def cmd_band(args) -> int:
    try:
        with open(args.file, encoding="utf-8") as fh:
            records = [json.loads(line) for line in fh if line.strip()]
    except OSError as exc:
        raise CliError(f"cannot read dataset {args.file!r}: {exc}")
    if not records:
        raise CliError(f"dataset {args.file!r} is empty")
    bands = band_by_difficulty(records, metric=args.metric, k=args.bands)
    for i, band in enumerate(bands):
        path = f"{args.out}.band{i}.jsonl"
        _check_writable(path)
        write_jsonl(band, path)
        print(f"band {i}: {len(band)} records -> {path}")
    return 0


def cmd_bench(args) -> int:
    task_ids = _resolve_tasks(args.task)
    seed = _resolve_seed(args)
    print(f"{'task':<20}{'accepted':>9}{'attempts':>9}{'elapsed_s':>10}{'ex/s':>10}")
    throughputs = []
    for task_id in task_ids:
        result = bench_archetype(task_id, args.seconds, master_seed=seed)
        throughputs.append(result.throughput)
        print(
            f"{task_id:<20}{result.accepted:>9}{result.attempts:>9}"
            f"{result.elapsed_seconds:>10.2f}{result.throughput:>10.1f}"
        )
    if len(throughputs) > 1:
        ordered = sorted(throughputs)
        mid = len(ordered) // 2
        median = (
            ordered[mid]
            if len(ordered) % 2
            else (ordered[mid - 1] + ordered[mid]) / 2
        )
        print(f"median throughput: {median:.1f} examples/sec")
    return 0


def _ascii_grid(rows: list[list[int]]) -> str:
    return "\n".join("".join(str(v) for v in row) for row in rows)


def _write_pgm(rows: list[list[int]], path: str) -> None:
    h, w = len(rows), len(rows[0])
    body = "\n".join(" ".join(str(v) for v in row) for row in rows)
    with open(path, "w", encoding="ascii") as fh:
        fh.write(f"P2\n{w} {h}\n9\n{body}\n")


def cmd_render(args) -> int:
    pairs = _load_examples(args.file)
    if not (0 <= args.index < len(pairs)):
        raise CliError(f"index {args.index} out of range (file has {len(pairs)} examples)")
    task_id, example = pairs[args.index]
    label = f" ({task_id})" if task_id else ""
    print(f"example {args.index}{label}")
    print("input:")
    print(_ascii_grid(example.input.to_rows()))
    print("output:")
    print(_ascii_grid(example.output.to_rows()))
    if args.pgm:
        _write_pgm(example.input.to_rows(), f"{args.pgm}.input.pgm")
        _write_pgm(example.output.to_rows(), f"{args.pgm}.output.pgm")
        print(f"wrote {args.pgm}.input.pgm and {args.pgm}.output.pgm")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gridforge",
        description="Procedural generator/verifier engine for grid transformation examples",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("list", help="show archetypes and their sampled degrees of freedom")
    p.set_defaults(func=cmd_list)

    p = sub.add_parser("generate", help="generate a verified, deduplicated dataset")
    p.add_argument("--task", required=True, help="task id, comma list, or 'all'")
    p.add_argument("--count", type=int, default=100, help="unique examples per task")
    p.add_argument("--seed", type=int, default=None, help="64-bit master seed")
    p.add_argument("--diff-lb", type=float, default=0.0, help="difficulty lower bound")
    p.add_argument("--diff-ub", type=float, default=1.0, help="difficulty upper bound")
    p.add_argument("--workers", type=int, default=1, help="parallel worker processes")
    p.add_argument("--max-attempts", type=int, default=0, help="attempt budget (default 20x count)")
    p.add_argument("--format", choices=("jsonl", "arc_json"), default="jsonl")
    p.add_argument("--out", required=True, help="output file path")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("verify", help="run a verifier over an external example file")
    p.add_argument("--task", required=True, help="task id")
    p.add_argument("--file", required=True, help="JSONL or ARC-style JSON example file")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("band", help="split a dataset into difficulty bands")
    p.add_argument("--file", required=True, help="input JSONL dataset")
    p.add_argument("--metric", choices=("rng", "pso"), default="pso")
    p.add_argument("--bands", type=int, default=2, help="number of equal-width bands")
    p.add_argument("--out", required=True, help="output path prefix")
    p.set_defaults(func=cmd_band)

    p = sub.add_parser("bench", help="measure verified unique examples per second")
    p.add_argument("--task", default="all", help="task id, comma list, or 'all'")
    p.add_argument("--seconds", type=float, default=5.0, help="measurement window per task")
    p.add_argument("--seed", type=int, default=None)
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("render", help="dump an example as ASCII (and optional PGM)")
    p.add_argument("--file", required=True, help="JSONL or ARC-style JSON example file")
    p.add_argument("--index", type=int, default=0, help="example index within the file")
    p.add_argument("--pgm", default=None, help="path prefix for PGM dumps")
    p.set_defaults(func=cmd_render)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
