"""Generate-verify-dedup runs, difficulty banding, dataset export.

Determinism contract: the emitted record set for a fixed (master_seed,
task, count, bounds) is identical no matter how many workers run. Each
attempt index derives its own child seed, indices are committed strictly in
order, and duplicates and failures consume indices just like accepted
examples, so retries never shift the stream.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass
from multiprocessing import Pool
from typing import Any, Iterable

from .grid import canonical_digest
from .metrics import difficulty_report
from .rng import FULL_BOUNDS, DifficultyBounds, TracedRng, derive_seed
from .tasks import ARCHETYPES, VerificationError, generate, verify

Record = dict[str, Any]

DEFAULT_ATTEMPT_FACTOR = 20


@dataclass(frozen=True)
class RunConfig:
    """Parameters of one generation run (per task in ``task_ids``)."""

    task_ids: tuple[str, ...]
    count: int
    bounds: DifficultyBounds = FULL_BOUNDS
    master_seed: int = 0
    max_attempts: int = 0  # 0 means DEFAULT_ATTEMPT_FACTOR * count
    workers: int = 1
    output_path: str | None = None
    format: str = "jsonl"

    def __post_init__(self):
        object.__setattr__(self, "task_ids", tuple(self.task_ids))
        if self.max_attempts == 0:
            object.__setattr__(self, "max_attempts", DEFAULT_ATTEMPT_FACTOR * self.count)
        if self.count < 1:
            raise ValueError("count must be >= 1")
        if self.max_attempts < self.count:
            raise ValueError("max_attempts must be >= count")
        if self.workers < 1:
            raise ValueError("workers must be >= 1")
        if self.format not in ("jsonl", "arc_json"):
            raise ValueError(f"unknown format {self.format!r}")
        for task_id in self.task_ids:
            if task_id not in ARCHETYPES:
                raise KeyError(f"unknown task id {task_id!r}")


@dataclass
class RunStats:
    """Attempt accounting for one task's run.

    Invariant: attempts = generator_failures + verifier_rejections +
    duplicates + accepted.
    """

    task_id: str = ""
    attempts: int = 0
    generator_failures: int = 0
    verifier_rejections: int = 0
    duplicates: int = 0
    accepted: int = 0
    elapsed_seconds: float = 0.0
    throughput: float = 0.0
    shortfall: bool = False


def _run_attempt(task_id: str, master_seed: int, bounds: DifficultyBounds, index: int):
    """One attempt = one index = one child seed. Picklable for workers."""
    task = ARCHETYPES[task_id]
    rng = TracedRng(derive_seed(master_seed, task_id, index))
    attempt = generate(task, rng, bounds)
    if attempt.example is None:
        return (index, "genfail", None)
    example = attempt.example
    try:
        expected = verify(task, example.input)
    except VerificationError:
        return (index, "reject", None)
    if expected != example.output:
        return (index, "reject", None)
    report = difficulty_report(example, attempt.trace)
    record = {
        "task": task_id,
        "index": index,
        "input": example.input.to_rows(),
        "output": example.output.to_rows(),
        "rng_difficulty": report.rng_difficulty,
        "pso_difficulty": report.pso_difficulty,
    }
    return (index, "ok", (canonical_digest(example), record))


def _generate_for_task(task_id: str, cfg: RunConfig, pool) -> tuple[list[Record], RunStats]:
    stats = RunStats(task_id=task_id)
    records: list[Record] = []
    digests: set[bytes] = set()
    start = time.perf_counter()
    while stats.accepted < cfg.count and stats.attempts < cfg.max_attempts:
        remaining = cfg.count - stats.accepted
        batch = max(cfg.workers * 8, min(512, remaining + 8))
        lo = stats.attempts
        hi = min(cfg.max_attempts, lo + batch)
        args = [(task_id, cfg.master_seed, cfg.bounds, i) for i in range(lo, hi)]
        if pool is not None:
            results = pool.starmap(_run_attempt, args)
        else:
            results = [_run_attempt(*a) for a in args]
        # Commit strictly in index order; drop any overshoot uncounted so the
        # consumed index range is the same for every worker count.
        for index, kind, payload in results:
            if stats.accepted >= cfg.count:
                break
            stats.attempts += 1
            if kind == "genfail":
                stats.generator_failures += 1
            elif kind == "reject":
                stats.verifier_rejections += 1
            else:
                digest, record = payload
                if digest in digests:
                    stats.duplicates += 1
                else:
                    digests.add(digest)
                    records.append(record)
                    stats.accepted += 1
    stats.elapsed_seconds = time.perf_counter() - start
    if stats.elapsed_seconds > 0:
        stats.throughput = stats.accepted / stats.elapsed_seconds
    stats.shortfall = stats.accepted < cfg.count
    return records, stats


def run_generation(cfg: RunConfig) -> tuple[list[Record], dict[str, RunStats]]:
    """Produce up to ``cfg.count`` unique verified examples per task.

    Every emitted record was re-verified (verify(input) == output) and is
    unique within its task by canonical digest. Returns the records in
    (task order, index order) plus per-task stats. On budget exhaustion the
    task's stats carry ``shortfall=True`` and the dataset is partial.
    """
    pool = Pool(cfg.workers) if cfg.workers > 1 else None
    try:
        all_records: list[Record] = []
        stats_by_task: dict[str, RunStats] = {}
        for task_id in cfg.task_ids:
            records, stats = _generate_for_task(task_id, cfg, pool)
            all_records.extend(records)
            stats_by_task[task_id] = stats
    finally:
        if pool is not None:
            pool.close()
            pool.join()
    if cfg.output_path is not None:
        if cfg.format == "jsonl":
            write_jsonl(all_records, cfg.output_path)
        else:
            write_arc_json(all_records, cfg.output_path)
    return all_records, stats_by_task


def jsonl_lines(records: Iterable[Record]) -> Iterable[str]:
    for record in records:
        yield json.dumps(record, separators=(",", ":")) + "\n"


def write_jsonl(records: Iterable[Record], path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.writelines(jsonl_lines(records))


def write_arc_json(records: Iterable[Record], path: str) -> None:
    """ARC-style layout: {"<task_id>": [{"input": ..., "output": ...}, ...]}."""
    grouped: dict[str, list[dict]] = {}
    for record in records:
        grouped.setdefault(record["task"], []).append(
            {"input": record["input"], "output": record["output"]}
        )
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(grouped, fh, separators=(",", ":"))


def band_by_difficulty(
    records: list[Record], metric: str = "pso", k: int = 2
) -> list[list[Record]]:
    """Partition records into k equal-width bins over the observed range.

    Bin edges span [min, max] of the chosen metric; empty bins are allowed;
    concatenating the bins in order restores the original multiset.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    if not records:
        raise ValueError("dataset is empty")
    key = {"rng": "rng_difficulty", "pso": "pso_difficulty"}.get(metric)
    if key is None:
        raise ValueError(f"unknown metric {metric!r} (expected 'rng' or 'pso')")
    values = [record[key] for record in records]
    lo, hi = min(values), max(values)
    bands: list[list[Record]] = [[] for _ in range(k)]
    span = hi - lo
    for record, value in zip(records, values):
        bin_index = 0 if span == 0 else min(k - 1, int((value - lo) / span * k))
        bands[bin_index].append(record)
    return bands


@dataclass(frozen=True)
class BenchResult:
    task_id: str
    accepted: int
    attempts: int
    elapsed_seconds: float
    throughput: float


def bench_archetype(
    task_id: str,
    seconds: float,
    master_seed: int = 0,
    bounds: DifficultyBounds = FULL_BOUNDS,
) -> BenchResult:
    """Measure verified-unique examples per second for one archetype.

    Runs the same generate -> verify -> digest-dedup loop the pipeline
    commits, for a fixed wall-clock window, without annotation or
    serialization overhead.
    """
    task = ARCHETYPES[task_id]
    digests: set[bytes] = set()
    accepted = attempts = 0
    start = time.perf_counter()
    deadline = start + seconds
    while time.perf_counter() < deadline:
        rng = TracedRng(derive_seed(master_seed, task_id, attempts))
        attempts += 1
        attempt = generate(task, rng, bounds)
        if attempt.example is None:
            continue
        example = attempt.example
        try:
            expected = verify(task, example.input)
        except VerificationError:
            continue
        if expected != example.output:
            continue
        digest = canonical_digest(example)
        if digest not in digests:
            digests.add(digest)
            accepted += 1
    elapsed = time.perf_counter() - start
    return BenchResult(
        task_id=task_id,
        accepted=accepted,
        attempts=attempts,
        elapsed_seconds=elapsed,
        throughput=accepted / elapsed if elapsed > 0 else 0.0,
    )
