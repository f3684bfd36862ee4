"""Post-hoc difficulty scores for generated examples.

Two scores, both in [0, 1]: the sampling score (mean of the normalized
cardinality draws made while generating, see :mod:`gridforge.rng`) and a
structural score computed from pixel, symbol and object counts. They are
rough ordering heuristics for banding or curriculum construction, not
precise measures; the pipeline attaches them as annotations and never
filters on them by default.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .grid import Example, count_components
from .rng import rng_difficulty

# Two full-size grids: 2 * 30 * 30 cells.
_MAX_PIXELS = 1800


@dataclass(frozen=True)
class DifficultyReport:
    """Difficulty annotations for one example.

    ``p``/``s``/``o`` are the pixel, distinct-symbol and 4-connected
    component counts over the input and output grids combined.
    """

    rng_difficulty: float
    pso_difficulty: float
    p: int
    s: int
    o: int


def pso_counts(e: Example) -> tuple[int, int, int]:
    """(pixels, symbols, objects) over input and output combined.

    Pixels = total cell count; symbols = distinct symbols present in either
    grid; objects = total 4-connected single-symbol components (background-
    colored components count too: every cell belongs to some object).
    """
    gi, go = e.input, e.output
    p = len(gi.cells) + len(go.cells)
    s = len(set(gi.cells) | set(go.cells))
    o = count_components(gi, 4) + count_components(go, 4)
    return p, s, o


def pso_difficulty(e: Example) -> float:
    """(P/1800 + S/10 + O/P) / 3 over the combined pixel/symbol/object counts.

    Always in (0, 1]: P <= 1800, S <= 10, and O <= P since every component
    has at least one pixel.
    """
    p, s, o = pso_counts(e)
    return (p / _MAX_PIXELS + s / 10 + o / p) / 3


def rng_difficulty_of(attempt) -> float:
    """Sampling-difficulty of a successful generation attempt."""
    if attempt.example is None:
        raise ValueError("attempt holds no example")
    return rng_difficulty(attempt.trace)


def difficulty_report(e: Example, trace: Sequence[float]) -> DifficultyReport:
    """Bundle both scores for an example and the trace that generated it."""
    p, s, o = pso_counts(e)
    return DifficultyReport(
        rng_difficulty=rng_difficulty(trace),
        pso_difficulty=(p / _MAX_PIXELS + s / 10 + o / p) / 3,
        p=p,
        s=s,
        o=o,
    )
