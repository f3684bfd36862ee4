"""Seeded randomness with difficulty-pruned cardinality sampling.

Every cardinality decision (grid dims, object counts, object sizes, symbol
counts, travel distances) goes through :meth:`TracedRng.unifint`, which
prunes the integer range with the caller's difficulty bounds and records the
normalized value it realized. The mean of those recorded values is the
sampling-based difficulty score of the example (:func:`rng_difficulty`).

All draws derive from ``random.Random.random()`` only (CPython guarantees
that sequence is stable across versions for a given seed), so datasets and
digests reproduce bit-exactly across releases and platforms. Parallel
generation never shares a TracedRng; each example index derives its own
seed via :func:`derive_seed`.
"""

from __future__ import annotations

import hashlib
import random
from dataclasses import dataclass
from typing import Sequence, TypeVar

T = TypeVar("T")

_MASK64 = (1 << 64) - 1


def _splitmix64(x: int) -> int:
    # Standard splitmix64 finalizer; good avalanche for seed derivation.
    x = (x + 0x9E3779B97F4A7C15) & _MASK64
    x ^= x >> 30
    x = (x * 0xBF58476D1CE4E5B9) & _MASK64
    x ^= x >> 27
    x = (x * 0x94D049BB133111EB) & _MASK64
    x ^= x >> 31
    return x


def derive_seed(master_seed: int, *salts: int | str) -> int:
    """Mix a 64-bit master seed with salts (ints or strings) into a child seed.

    Deterministic and order-sensitive; strings are hashed so task ids can
    salt worker seeds stably.
    """
    x = master_seed & _MASK64
    for salt in salts:
        if isinstance(salt, str):
            salt = int.from_bytes(
                hashlib.blake2b(salt.encode("utf-8"), digest_size=8).digest(), "big"
            )
        x = _splitmix64(x ^ (salt & _MASK64))
    return x


@dataclass(frozen=True)
class DifficultyBounds:
    """Sub-interval [lo, hi] of [0, 1] that prunes cardinality ranges."""

    lo: float = 0.0
    hi: float = 1.0

    def __post_init__(self):
        if not (0.0 <= self.lo <= self.hi <= 1.0):
            raise ValueError(f"bounds [{self.lo}, {self.hi}] must satisfy 0 <= lo <= hi <= 1")


FULL_BOUNDS = DifficultyBounds(0.0, 1.0)


class TracedRng:
    """Deterministic random stream that records its difficulty-pruned draws.

    Identical seed + identical call sequence gives identical outputs and an
    identical trace. Only ``unifint`` appends to the trace; ``choice``,
    ``randint``, ``sample`` and ``choices`` are plain uniform draws for
    decisions that carry no difficulty signal (color identity, positions).
    A TracedRng is single-owner: never share one across workers.
    """

    __slots__ = ("seed", "_random", "trace")

    def __init__(self, seed: int):
        self.seed = seed & _MASK64
        self._random = random.Random(self.seed)
        self.trace: list[float] = []

    def unifint(self, bounds: DifficultyBounds, lo_val: int, hi_val: int) -> int:
        """Uniform integer from [lo_val, hi_val] pruned by difficulty bounds.

        The sampled range is [lo_val + floor(span*lo), lo_val + floor(span*hi)]
        with span = hi_val - lo_val; bounds [0, 0] always give lo_val and
        [1, 1] always give hi_val. Appends (value - lo_val) / span to the
        trace (bounds.lo when the range is a single value).
        """
        if lo_val > hi_val:
            raise ValueError(f"empty range [{lo_val}, {hi_val}]")
        span = hi_val - lo_val
        if span == 0:
            self.trace.append(bounds.lo)
            return lo_val
        plo = lo_val + int(span * bounds.lo)
        phi = lo_val + int(span * bounds.hi)
        n = phi - plo + 1
        value = plo + min(int(self._random.random() * n), n - 1)
        self.trace.append((value - lo_val) / span)
        return value

    def randint(self, lo: int, hi: int) -> int:
        """Plain uniform integer in [lo, hi], untraced."""
        if lo > hi:
            raise ValueError(f"empty range [{lo}, {hi}]")
        n = hi - lo + 1
        return lo + min(int(self._random.random() * n), n - 1)

    def choice(self, items: Sequence[T]) -> T:
        """Uniform selection from a non-empty sequence, untraced."""
        if not items:
            raise ValueError("cannot choose from an empty sequence")
        n = len(items)
        return items[min(int(self._random.random() * n), n - 1)]

    def choices(self, items: Sequence[T], k: int) -> list[T]:
        """k independent uniform selections (with replacement), untraced."""
        if not items:
            raise ValueError("cannot choose from an empty sequence")
        n = len(items)
        rnd = self._random.random
        return [items[min(int(rnd() * n), n - 1)] for _ in range(k)]

    def sample(self, items: Sequence[T], k: int) -> list[T]:
        """k distinct items, uniformly without replacement, untraced."""
        n = len(items)
        if not (0 <= k <= n):
            raise ValueError(f"cannot sample {k} items from {n}")
        pool = list(items)
        rnd = self._random.random
        for i in range(k):
            j = i + min(int(rnd() * (n - i)), n - i - 1)
            pool[i], pool[j] = pool[j], pool[i]
        return pool[:k]

    def spawn(self, *salts: int | str) -> "TracedRng":
        """Independent child stream with a seed derived from this one's."""
        return TracedRng(derive_seed(self.seed, *salts))


def rng_difficulty(trace: Sequence[float]) -> float:
    """Mean of the normalized cardinality samples; 0.0 for an empty trace."""
    if not trace:
        return 0.0
    return sum(trace) / len(trace)
