"""Random object shapes and the two placement strategies.

Shapes grow cell by cell from a single origin pixel, staying connected and
inside a bounding-box budget, then get colored. Placement is either
rejection sampling (propose an offset, accept if the object covers only
background) or exhaustive candidate filtering (enumerate every legal offset
first, then sample one). The two accept exactly the same offsets; they
differ only in how they search.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable

from .grid import CellSet, Grid, GridObject, check_symbol
from .rng import TracedRng

_ORTHO = ((-1, 0), (1, 0), (0, -1), (0, 1))
_DIAG = _ORTHO + ((-1, -1), (-1, 1), (1, -1), (1, 1))


@dataclass(frozen=True)
class ShapeBudget:
    """Size and extent limits for a sampled shape."""

    num_pixels: int
    max_h: int
    max_w: int
    connectivity: int = 4

    def __post_init__(self):
        if self.num_pixels < 1:
            raise ValueError("num_pixels must be >= 1")
        if self.num_pixels > self.max_h * self.max_w:
            raise ValueError(
                f"{self.num_pixels} pixels cannot fit a {self.max_h}x{self.max_w} box"
            )
        if self.connectivity not in (4, 8):
            raise ValueError("connectivity must be 4 or 8")


def sample_shape(rng: TracedRng, budget: ShapeBudget) -> CellSet:
    """Connected random shape of exactly ``num_pixels`` cells.

    Grows from the origin by repeatedly picking, uniformly, a cell adjacent
    to the current shape whose inclusion keeps the bounding box within
    ``max_h`` x ``max_w``. A shape smaller than its box always has at least
    one such cell, so growth never gets stuck. The result is normalized so
    min row = min col = 0.
    """
    moves = _ORTHO if budget.connectivity == 4 else _DIAG
    cells = {(0, 0)}
    min_r = max_r = min_c = max_c = 0
    while len(cells) < budget.num_pixels:
        frontier = set()
        for r, c in cells:
            for dr, dc in moves:
                cand = (r + dr, c + dc)
                if cand in cells:
                    continue
                nr, nc = cand
                if max(max_r, nr) - min(min_r, nr) + 1 > budget.max_h:
                    continue
                if max(max_c, nc) - min(min_c, nc) + 1 > budget.max_w:
                    continue
                frontier.add(cand)
        r, c = rng.choice(sorted(frontier))
        cells.add((r, c))
        min_r, max_r = min(min_r, r), max(max_r, r)
        min_c, max_c = min(min_c, c), max(max_c, c)
    return frozenset((r - min_r, c - min_c) for r, c in cells)


def colorize(
    rng: TracedRng,
    shape: CellSet,
    colors: Iterable[int],
    mode: str = "uniform",
) -> GridObject:
    """Color a shape into a grid object.

    ``uniform`` gives every pixel one color drawn from ``colors``;
    ``per_pixel`` colors each pixel independently.
    """
    pool = sorted(set(colors))
    if not pool:
        raise ValueError("colors must be non-empty")
    for v in pool:
        check_symbol(v)
    ordered = sorted(shape)
    if mode == "uniform":
        color = rng.choice(pool)
        return frozenset((r, c, color) for r, c in ordered)
    if mode == "per_pixel":
        return frozenset((r, c, rng.choice(pool)) for r, c in ordered)
    raise ValueError(f"unknown colorize mode {mode!r}")


def object_bbox(obj: GridObject) -> tuple[int, int, int, int]:
    """(min_r, min_c, max_r, max_c) over the object's pixels."""
    rows = [r for r, _, _ in obj]
    cols = [c for _, c, _ in obj]
    return min(rows), min(cols), max(rows), max(cols)


def _fits(g: Grid, pixels, bg: int, dr: int, dc: int) -> bool:
    w = g.width
    cells = g.cells
    for r, c, _ in pixels:
        if cells[(r + dr) * w + c + dc] != bg:
            return False
    return True


def place_rejection(
    rng: TracedRng,
    g: Grid,
    obj: GridObject,
    bg: int,
    max_tries: int,
) -> tuple[int, int] | None:
    """Propose random offsets until the object covers only ``bg`` cells.

    Returns the accepted (dr, dc) offset, or None after ``max_tries``
    rejections (or when no in-bounds offset exists at all). Failure is a
    normal outcome the caller reports or retries on.
    """
    if max_tries < 1:
        raise ValueError("max_tries must be >= 1")
    min_r, min_c, max_r, max_c = object_bbox(obj)
    dr_lo, dr_hi = -min_r, g.height - 1 - max_r
    dc_lo, dc_hi = -min_c, g.width - 1 - max_c
    if dr_lo > dr_hi or dc_lo > dc_hi:
        return None
    pixels = sorted(obj)
    for _ in range(max_tries):
        dr = rng.randint(dr_lo, dr_hi)
        dc = rng.randint(dc_lo, dc_hi)
        if _fits(g, pixels, bg, dr, dc):
            return (dr, dc)
    return None


def candidate_positions(
    g: Grid,
    obj: GridObject,
    bg: int,
    predicate: Callable[[int, int], bool] | None = None,
) -> list[tuple[int, int]]:
    """Every offset where the object fits over ``bg`` cells, row-major.

    The guaranteed-to-work strategy: callers sample uniformly from this
    list. ``predicate(dr, dc)`` filters further when given. An empty list
    means no placement exists.
    """
    min_r, min_c, max_r, max_c = object_bbox(obj)
    pixels = sorted(obj)
    out = []
    for dr in range(-min_r, g.height - max_r):
        for dc in range(-min_c, g.width - max_c):
            if _fits(g, pixels, bg, dr, dc):
                if predicate is None or predicate(dr, dc):
                    out.append((dr, dc))
    return out
