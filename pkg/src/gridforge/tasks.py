"""Ten task archetypes: paired example generators and verifiers.

A task archetype binds a randomized generator (one example per call, with
every cardinality decision routed through difficulty-pruned sampling) to a
deterministic verifier that maps any valid input grid to its unique correct
output grid. A task is *defined* by this pair: an example is valid exactly
when the verifier reproduces its output from its input.

Generators construct the output with the same pure transformation the
verifier applies, so the pipeline's independent re-verification is the
quality gate, not a coin flip. Generation can still fail (no legal
placement left, a constraint impossible to satisfy); failures are normal,
countable outcomes that the caller retries with fresh randomness.

Background conventions are fixed per archetype so verifiers are total on
their valid-input sets: 0 for denoise, recolor_largest, gravity,
fill_enclosed, move_to_marker and connect_dots; the most common symbol for
majority_color; mirror/scaling/symmetry tasks have no background notion.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from math import ceil
from typing import Callable

from .grid import (
    Example,
    Grid,
    GridObject,
    _make,
    canvas,
    enclosed_cells,
    hmirror,
    paint,
    rot180,
    upscale,
    vmirror,
)
from .objects import (
    ShapeBudget,
    candidate_positions,
    colorize,
    object_bbox,
    place_rejection,
    sample_shape,
)
from .rng import DifficultyBounds, TracedRng

PLACEMENT_EXHAUSTED = "placement_exhausted"
CONSTRAINT_VIOLATED = "constraint_violated"

_NONZERO = tuple(range(1, 10))


class VerificationError(Exception):
    """Raised by a verifier on input that violates the task's contract."""


class GenerationFailure(Exception):
    """Internal signal that one generation attempt cannot be completed."""

    def __init__(self, reason: str):
        super().__init__(reason)
        self.reason = reason


@dataclass(frozen=True)
class TaskArchetype:
    """Stable id plus the generator/verifier pair and its documentation.

    ``dof`` lists the difficulty-pruned draws the generator performs, in
    order, so the sampling-difficulty score is interpretable per task.
    ``min_height``/``min_width`` are the input dims produced at bounds
    [0, 0], the smallest non-degenerate instance of the archetype.
    """

    id: str
    generator: Callable[[TracedRng, DifficultyBounds], Example]
    verifier: Callable[[Grid], Grid]
    description: str
    dof: tuple[str, ...]
    min_height: int
    min_width: int


@dataclass(frozen=True)
class GenerationAttempt:
    """Outcome of one generation call: an example or a failure reason.

    ``trace`` holds every normalized difficulty sample the attempt consumed,
    including draws made before an internal sub-step failed and was retried;
    those stale samples are a known flaw of the sampling-difficulty score.
    """

    example: Example | None
    failure_reason: str | None
    trace: tuple[float, ...]


def generate(task: TaskArchetype, rng: TracedRng, bounds: DifficultyBounds) -> GenerationAttempt:
    """Run the task's generator once, capturing its trace and failures."""
    start = len(rng.trace)
    try:
        example = task.generator(rng, bounds)
    except GenerationFailure as failure:
        return GenerationAttempt(None, failure.reason, tuple(rng.trace[start:]))
    return GenerationAttempt(example, None, tuple(rng.trace[start:]))


def verify(task: TaskArchetype, g: Grid) -> Grid:
    """Apply the task's verifier; VerificationError on invalid input."""
    return task.verifier(g)


# ---------------------------------------------------------------------------
# shared helpers


def _noise_grid(rng: TracedRng, h: int, w: int, pool: list[int]) -> Grid:
    return Grid(h, w, tuple(rng.choices(pool, h * w)))


def _nonzero_components(g: Grid) -> list[tuple[int, list[int]]]:
    """4-connected components of non-zero cells: (symbol, flat indices)."""
    h, w, cells = g.height, g.width, g.cells
    n = h * w
    seen = bytearray(n)
    comps = []
    for start in range(n):
        if seen[start] or cells[start] == 0:
            continue
        color = cells[start]
        seen[start] = 1
        stack = [start]
        member = [start]
        while stack:
            i = stack.pop()
            r, c = divmod(i, w)
            if r > 0 and not seen[i - w] and cells[i - w] == color:
                seen[i - w] = 1
                stack.append(i - w)
                member.append(i - w)
            if r + 1 < h and not seen[i + w] and cells[i + w] == color:
                seen[i + w] = 1
                stack.append(i + w)
                member.append(i + w)
            if c > 0 and not seen[i - 1] and cells[i - 1] == color:
                seen[i - 1] = 1
                stack.append(i - 1)
                member.append(i - 1)
            if c + 1 < w and not seen[i + 1] and cells[i + 1] == color:
                seen[i + 1] = 1
                stack.append(i + 1)
                member.append(i + 1)
        comps.append((color, member))
    return comps


# ---------------------------------------------------------------------------
# mirror_h -- output is the input with row order reversed


def _gen_mirror_h(rng: TracedRng, bounds: DifficultyBounds) -> Example:
    h = rng.unifint(bounds, 1, 30)
    w = rng.unifint(bounds, 1, 30)
    nsym = rng.unifint(bounds, 1, 10)
    pool = rng.sample(range(10), nsym)
    inp = _noise_grid(rng, h, w, pool)
    out = hmirror(inp)
    # Joint orientation variation, restricted to transforms that commute
    # with the row flip so the pair stays valid.
    aug = rng.choice(("identity", "vmirror", "rot180"))
    if aug == "vmirror":
        inp, out = vmirror(inp), vmirror(out)
    elif aug == "rot180":
        inp, out = rot180(inp), rot180(out)
    return Example(inp, out)


def _verify_mirror_h(g: Grid) -> Grid:
    return hmirror(g)


# ---------------------------------------------------------------------------
# scale2 -- output is the input with every cell expanded to a 2x2 block


def _gen_scale2(rng: TracedRng, bounds: DifficultyBounds) -> Example:
    h = rng.unifint(bounds, 1, 15)
    w = rng.unifint(bounds, 1, 15)
    nsym = rng.unifint(bounds, 1, 10)
    pool = rng.sample(range(10), nsym)
    inp = _noise_grid(rng, h, w, pool)
    return Example(inp, upscale(inp, 2, 2))


def _verify_scale2(g: Grid) -> Grid:
    if g.height > 15 or g.width > 15:
        raise VerificationError(f"input dims {g.height}x{g.width} exceed 15")
    return upscale(g, 2, 2)


# ---------------------------------------------------------------------------
# majority_color -- 1x1 output holding the dominant non-background symbol


def _gen_majority_color(rng: TracedRng, bounds: DifficultyBounds) -> Example:
    h = rng.unifint(bounds, 2, 30)
    w = rng.unifint(bounds, 2, 30)
    total = h * w
    bg, winner = rng.sample(range(10), 2)
    # Keep the background the strict overall mode: bg count ends up at
    # total - cw - spare_used >= cw + 1.
    cw = rng.unifint(bounds, 1, (total - 1) // 2)
    spare = total - 2 * cw - 1
    k_max = min(8, spare) if cw >= 2 else 0
    k = rng.unifint(bounds, 0, k_max) if k_max > 0 else 0
    others = rng.sample([s for s in range(10) if s != bg and s != winner], k)
    counts: list[tuple[int, int]] = []
    budget = spare
    for i, sym in enumerate(others):
        hi = min(cw - 1, budget - (k - i - 1))
        ci = rng.unifint(bounds, 1, hi)
        counts.append((sym, ci))
        budget -= ci
    n_painted = cw + sum(ci for _, ci in counts)
    positions = rng.sample(range(total), n_painted)
    buf = [bg] * total
    pos = iter(positions)
    for _ in range(cw):
        buf[next(pos)] = winner
    for sym, ci in counts:
        for _ in range(ci):
            buf[next(pos)] = sym
    return Example(Grid(h, w, tuple(buf)), Grid(1, 1, (winner,)))


def _verify_majority_color(g: Grid) -> Grid:
    ordered = Counter(g.cells).most_common()
    if len(ordered) < 2:
        raise VerificationError("no symbols besides the background")
    if ordered[0][1] == ordered[1][1]:
        raise VerificationError("background symbol is ambiguous (tied counts)")
    bg = ordered[0][0]
    rest = [(sym, n) for sym, n in ordered if sym != bg]
    if len(rest) >= 2 and rest[0][1] == rest[1][1]:
        raise VerificationError("tied majority among non-background symbols")
    return Grid(1, 1, (rest[0][0],))


# ---------------------------------------------------------------------------
# denoise -- erase every single-pixel non-background component


def _strip_single_pixels(g: Grid) -> Grid:
    h, w, cells = g.height, g.width, g.cells
    buf = list(cells)
    for i, v in enumerate(cells):
        if v == 0:
            continue
        r, c = divmod(i, w)
        if r > 0 and cells[i - w] == v:
            continue
        if r + 1 < h and cells[i + w] == v:
            continue
        if c > 0 and cells[i - 1] == v:
            continue
        if c + 1 < w and cells[i + 1] == v:
            continue
        buf[i] = 0
    return _make(h, w, buf)


def _gen_denoise(rng: TracedRng, bounds: DifficultyBounds) -> Example:
    h = rng.unifint(bounds, 3, 30)
    w = rng.unifint(bounds, 3, 30)
    area = h * w
    nsym = rng.unifint(bounds, 1, 9)
    pool = rng.sample(_NONZERO, nsym)
    nobj = rng.unifint(bounds, 1, max(1, min(8, area // 12)))
    nnoise = rng.unifint(bounds, 1, max(1, min(10, area // 16)))
    g = canvas(h, w, 0)
    for _ in range(nobj):
        for _try in range(3):
            size = rng.unifint(bounds, 2, max(2, min(9, area // (2 * nobj))))
            shape = sample_shape(rng, ShapeBudget(size, min(h, size), min(w, size)))
            obj = colorize(rng, shape, pool, "uniform")
            cands = candidate_positions(g, obj, 0)
            if cands:
                g = paint(g, obj, *rng.choice(cands))
                break
        else:
            raise GenerationFailure(PLACEMENT_EXHAUSTED)
    for _ in range(nnoise):
        dot = frozenset({(0, 0, rng.choice(pool))})
        offset = place_rejection(rng, g, dot, 0, 8)
        if offset is None:
            raise GenerationFailure(PLACEMENT_EXHAUSTED)
        g = paint(g, dot, *offset)
    return Example(g, _strip_single_pixels(g))


# ---------------------------------------------------------------------------
# recolor_largest -- repaint the strictly largest component with symbol 1


def _recolor_largest(g: Grid) -> Grid:
    comps = _nonzero_components(g)
    if not comps:
        raise VerificationError("no objects on the grid")
    sizes = sorted((len(member) for _, member in comps), reverse=True)
    if len(sizes) >= 2 and sizes[0] == sizes[1]:
        raise VerificationError("largest object is not unique")
    _, member = max(comps, key=lambda comp: len(comp[1]))
    buf = list(g.cells)
    for i in member:
        buf[i] = 1
    return _make(g.height, g.width, buf)


def _place_separated(
    rng: TracedRng, g: Grid, obj: GridObject, max_tries: int
) -> tuple[int, int] | None:
    """Rejection placement that also forbids same-color 4-adjacency, so
    painted objects never merge into larger components."""
    h, w, cells = g.height, g.width, g.cells
    min_r, min_c, max_r, max_c = object_bbox(obj)
    dr_lo, dr_hi = -min_r, h - 1 - max_r
    dc_lo, dc_hi = -min_c, w - 1 - max_c
    if dr_lo > dr_hi or dc_lo > dc_hi:
        return None
    pixels = sorted(obj)
    for _ in range(max_tries):
        dr = rng.randint(dr_lo, dr_hi)
        dc = rng.randint(dc_lo, dc_hi)
        ok = True
        for r, c, v in pixels:
            rr, cc = r + dr, c + dc
            i = rr * w + cc
            if cells[i] != 0:
                ok = False
                break
            if (
                (rr > 0 and cells[i - w] == v)
                or (rr + 1 < h and cells[i + w] == v)
                or (cc > 0 and cells[i - 1] == v)
                or (cc + 1 < w and cells[i + 1] == v)
            ):
                ok = False
                break
        if ok:
            return (dr, dc)
    return None


def _gen_recolor_largest(rng: TracedRng, bounds: DifficultyBounds) -> Example:
    h = rng.unifint(bounds, 2, 30)
    w = rng.unifint(bounds, 2, 30)
    area = h * w
    nobj = rng.unifint(bounds, 1, max(1, min(12, area // 9)))
    size_cap = max(2, min(10, area // (3 * nobj)))
    g = canvas(h, w, 0)
    lead_size = 0
    for index in range(nobj):
        for _try in range(4):
            if index == 0:
                size = rng.unifint(bounds, 1 if nobj == 1 else 2, size_cap + 1)
            else:
                size = rng.unifint(bounds, 1, lead_size - 1)
            shape = sample_shape(rng, ShapeBudget(size, min(h, size), min(w, size)))
            obj = colorize(rng, shape, _NONZERO, "uniform")
            offset = _place_separated(rng, g, obj, 20)
            if offset is not None:
                g = paint(g, obj, *offset)
                if index == 0:
                    lead_size = size
                break
        else:
            raise GenerationFailure(PLACEMENT_EXHAUSTED)
    try:
        out = _recolor_largest(g)
    except VerificationError:
        raise GenerationFailure(CONSTRAINT_VIOLATED)
    return Example(g, out)


# ---------------------------------------------------------------------------
# gravity -- non-background pixels fall to the bottom of their column


def _apply_gravity(g: Grid) -> Grid:
    h, w, cells = g.height, g.width, g.cells
    buf = [0] * (h * w)
    for c in range(w):
        col = [cells[r * w + c] for r in range(h) if cells[r * w + c] != 0]
        base = h - len(col)
        for k, v in enumerate(col):
            buf[(base + k) * w + c] = v
    return _make(h, w, buf)


def _gen_gravity(rng: TracedRng, bounds: DifficultyBounds) -> Example:
    h = rng.unifint(bounds, 2, 30)
    w = rng.unifint(bounds, 1, 30)
    nsym = rng.unifint(bounds, 1, 9)
    pool = rng.sample(_NONZERO, nsym)
    npix = rng.unifint(bounds, 1, h * w)
    buf = [0] * (h * w)
    for i in rng.sample(range(h * w), npix):
        buf[i] = rng.choice(pool)
    inp = Grid(h, w, tuple(buf))
    return Example(inp, _apply_gravity(inp))


# ---------------------------------------------------------------------------
# fill_enclosed -- paint fully enclosed background cells with symbol 4


def _fill_enclosed(g: Grid) -> Grid:
    enc = enclosed_cells(g, 0)
    if not enc:
        return g
    w = g.width
    buf = list(g.cells)
    for r, c in enc:
        buf[r * w + c] = 4
    return _make(g.height, g.width, buf)


def _ring_object(rh: int, rw: int, color: int) -> GridObject:
    pix = set()
    for c in range(rw):
        pix.add((0, c, color))
        pix.add((rh - 1, c, color))
    for r in range(rh):
        pix.add((r, 0, color))
        pix.add((r, rw - 1, color))
    return frozenset(pix)


def _gen_fill_enclosed(rng: TracedRng, bounds: DifficultyBounds) -> Example:
    h = rng.unifint(bounds, 3, 30)
    w = rng.unifint(bounds, 3, 30)
    max_rings = min(8, (h // 3) * (w // 3))
    nrings = rng.unifint(bounds, 1, max_rings)
    # One ring per tile of a coarse partition, so any draw always fits.
    tile_rows = ceil(nrings / (w // 3))
    tile_cols = ceil(nrings / tile_rows)
    tile_h = h // tile_rows
    tile_w = w // tile_cols
    g = canvas(h, w, 0)
    for t in range(nrings):
        rh = rng.unifint(bounds, 3, tile_h)
        rw = rng.unifint(bounds, 3, tile_w)
        ring = _ring_object(rh, rw, rng.choice(_NONZERO))
        base_r = (t // tile_cols) * tile_h + rng.randint(0, tile_h - rh)
        base_c = (t % tile_cols) * tile_w + rng.randint(0, tile_w - rw)
        g = paint(g, ring, base_r, base_c)
    nnoise = rng.unifint(bounds, 0, max(0, (h * w) // 40))
    for _ in range(nnoise):
        dot = frozenset({(0, 0, rng.choice(_NONZERO))})
        offset = place_rejection(rng, g, dot, 0, 6)
        if offset is not None:
            g = paint(g, dot, *offset)
    return Example(g, _fill_enclosed(g))


# ---------------------------------------------------------------------------
# move_to_marker -- translate the object's bounding box onto the marker


def _gen_move_to_marker(rng: TracedRng, bounds: DifficultyBounds) -> Example:
    h = rng.unifint(bounds, 4, 30)
    w = rng.unifint(bounds, 4, 30)
    # Object box leaves two rows and columns of slack so a feasible marker
    # cell always exists somewhere.
    box_h, box_w = h - 2, w - 2
    size_cap = max(2, min(14, (box_h * box_w) // 3))
    obj_color = rng.choice(_NONZERO)
    marker_color = rng.choice(tuple(s for s in _NONZERO if s != obj_color))
    for _try in range(4):
        size = rng.unifint(bounds, 2, size_cap)
        shape = sample_shape(rng, ShapeBudget(size, box_h, box_w))
        obj = colorize(rng, shape, [obj_color], "uniform")
        blank = canvas(h, w, 0)
        dr, dc = rng.choice(candidate_positions(blank, obj, 0))
        g = paint(blank, obj, dr, dc)
        oh = max(r for r, _ in shape) + 1
        ow = max(c for _, c in shape) + 1
        object_cells = {(r + dr, c + dc) for r, c in shape}
        blocked = set(object_cells)
        for r, c in object_cells:
            blocked.update(((r - 1, c), (r + 1, c), (r, c - 1), (r, c + 1)))
        marker_cands = [
            (r, c)
            for r in range(h - oh + 1)
            for c in range(w - ow + 1)
            if (r, c) not in blocked
        ]
        if marker_cands:
            mr, mc = rng.choice(marker_cands)
            inp = paint(g, frozenset({(0, 0, marker_color)}), mr, mc)
            out = paint(canvas(h, w, 0), frozenset(obj), mr, mc)
            return Example(inp, out)
    raise GenerationFailure(PLACEMENT_EXHAUSTED)


def _verify_move_to_marker(g: Grid) -> Grid:
    comps = _nonzero_components(g)
    if len(comps) != 2:
        raise VerificationError("expected exactly one object and one marker")
    comps.sort(key=lambda comp: len(comp[1]))
    (marker_color, marker_member), (obj_color, obj_member) = comps
    if len(marker_member) != 1 or len(obj_member) < 2:
        raise VerificationError("expected one single-pixel marker and one multi-pixel object")
    if marker_color == obj_color:
        raise VerificationError("marker and object must differ in color")
    h, w = g.height, g.width
    mr, mc = divmod(marker_member[0], w)
    obj_cells = [divmod(i, w) for i in obj_member]
    for r, c in obj_cells:
        if (
            (r == mr and abs(c - mc) == 1)
            or (c == mc and abs(r - mr) == 1)
        ):
            raise VerificationError("marker must not touch the object")
    min_r = min(r for r, _ in obj_cells)
    min_c = min(c for _, c in obj_cells)
    oh = max(r for r, _ in obj_cells) - min_r + 1
    ow = max(c for _, c in obj_cells) - min_c + 1
    if mr + oh > h or mc + ow > w:
        raise VerificationError("object does not fit at the marker position")
    moved = frozenset(
        (r - min_r, c - min_c, obj_color) for r, c in obj_cells
    )
    return paint(canvas(h, w, 0), moved, mr, mc)


# ---------------------------------------------------------------------------
# symmetry_complete -- restore zeroed columns from their mirror image


def _gen_symmetry_complete(rng: TracedRng, bounds: DifficultyBounds) -> Example:
    h = rng.unifint(bounds, 1, 30)
    half = rng.unifint(bounds, 1, 15)
    w = 2 * half
    nsym = rng.unifint(bounds, 1, 9)
    pool = rng.sample(_NONZERO, nsym)
    out_buf = []
    for _ in range(h):
        left = rng.choices(pool, half)
        out_buf.extend(left)
        out_buf.extend(reversed(left))
    out = Grid(h, w, tuple(out_buf))
    ndrop = rng.unifint(bounds, 1, half)
    dropped = rng.sample(range(half, w), ndrop)
    in_buf = list(out_buf)
    for c in dropped:
        for r in range(h):
            in_buf[r * w + c] = 0
    return Example(Grid(h, w, tuple(in_buf)), out)


def _verify_symmetry_complete(g: Grid) -> Grid:
    h, w, cells = g.height, g.width, g.cells
    if w % 2 != 0:
        raise VerificationError("width must be even")
    buf = list(cells)
    for r in range(h):
        base = r * w
        for c in range(w):
            v = cells[base + c]
            m = cells[base + w - 1 - c]
            if v == 0:
                if m == 0:
                    raise VerificationError(f"cell ({r}, {c}) cannot be restored")
                buf[base + c] = m
            elif m != 0 and m != v:
                raise VerificationError(f"row {r} is not mirror-consistent")
    return _make(h, w, buf)


# ---------------------------------------------------------------------------
# connect_dots -- fill the straight segment between same-colored endpoints


def _gen_connect_dots(rng: TracedRng, bounds: DifficultyBounds) -> Example:
    h = rng.unifint(bounds, 2, 30)
    w = rng.unifint(bounds, 2, 30)
    npairs = rng.unifint(bounds, 1, min(9, max(1, (h * w) // 8)))
    colors = rng.sample(_NONZERO, npairs)
    occupied = bytearray(h * w)
    endpoints: list[tuple[int, int]] = []
    fills: list[tuple[int, int]] = []
    for color in colors:
        for _try in range(12):
            horizontal = rng.choice((True, False))
            span = w if horizontal else h
            length = rng.unifint(bounds, 2, span)
            line = rng.randint(0, (h if horizontal else w) - 1)
            starts = []
            for s in range(span - length + 1):
                if horizontal:
                    idxs = range(line * w + s, line * w + s + length)
                else:
                    idxs = range(s * w + line, (s + length) * w + line, w)
                if not any(occupied[i] for i in idxs):
                    starts.append(s)
            if not starts:
                continue
            s = rng.choice(starts)
            if horizontal:
                seg = list(range(line * w + s, line * w + s + length))
            else:
                seg = list(range(s * w + line, (s + length) * w + line, w))
            for i in seg:
                occupied[i] = 1
            endpoints.append((seg[0], color))
            endpoints.append((seg[-1], color))
            fills.extend((i, color) for i in seg[1:-1])
            break
        else:
            raise GenerationFailure(PLACEMENT_EXHAUSTED)
    in_buf = [0] * (h * w)
    for i, color in endpoints:
        in_buf[i] = color
    out_buf = list(in_buf)
    for i, color in fills:
        out_buf[i] = color
    return Example(Grid(h, w, tuple(in_buf)), Grid(h, w, tuple(out_buf)))


def _verify_connect_dots(g: Grid) -> Grid:
    h, w, cells = g.height, g.width, g.cells
    points: dict[int, list[tuple[int, int]]] = {}
    for i, v in enumerate(cells):
        if v:
            points.setdefault(v, []).append(divmod(i, w))
    if not points:
        raise VerificationError("no endpoints on the grid")
    buf = list(cells)
    claimed: dict[int, int] = {}
    for color, pts in points.items():
        if len(pts) != 2:
            raise VerificationError(f"symbol {color} must appear exactly twice")
        (r1, c1), (r2, c2) = sorted(pts)
        if r1 == r2:
            between = range(r1 * w + c1 + 1, r1 * w + c2)
        elif c1 == c2:
            between = range((r1 + 1) * w + c1, r2 * w + c1, w)
        else:
            raise VerificationError(f"symbol {color} endpoints share no row or column")
        for i in between:
            if cells[i] != 0:
                raise VerificationError(f"path for symbol {color} is blocked")
            if i in claimed:
                raise VerificationError("paths cross")
            claimed[i] = color
    for i, color in claimed.items():
        buf[i] = color
    return _make(h, w, buf)


# ---------------------------------------------------------------------------
# registry


def _archetype(
    id: str,
    generator,
    verifier,
    description: str,
    dof: tuple[str, ...],
    min_dims: tuple[int, int],
) -> TaskArchetype:
    return TaskArchetype(id, generator, verifier, description, dof, *min_dims)


ARCHETYPES: dict[str, TaskArchetype] = {
    t.id: t
    for t in (
        _archetype(
            "mirror_h",
            _gen_mirror_h,
            _verify_mirror_h,
            "reverse the row order of a noise grid",
            ("height", "width", "symbol count"),
            (1, 1),
        ),
        _archetype(
            "scale2",
            _gen_scale2,
            _verify_scale2,
            "expand every cell into a 2x2 block (input dims <= 15)",
            ("height", "width", "symbol count"),
            (1, 1),
        ),
        _archetype(
            "majority_color",
            _gen_majority_color,
            _verify_majority_color,
            "1x1 output holding the dominant non-background symbol",
            ("height", "width", "majority count", "runner-up symbol count", "runner-up counts"),
            (2, 2),
        ),
        _archetype(
            "denoise",
            _gen_denoise,
            _strip_single_pixels,
            "erase single-pixel components, keep multi-pixel objects",
            ("height", "width", "symbol count", "object count", "noise count", "object sizes"),
            (3, 3),
        ),
        _archetype(
            "recolor_largest",
            _gen_recolor_largest,
            _recolor_largest,
            "repaint the strictly largest object with symbol 1",
            ("height", "width", "object count", "object sizes"),
            (2, 2),
        ),
        _archetype(
            "gravity",
            _gen_gravity,
            _apply_gravity,
            "pixels fall to the bottom of their column",
            ("height", "width", "symbol count", "pixel count"),
            (2, 1),
        ),
        _archetype(
            "fill_enclosed",
            _gen_fill_enclosed,
            _fill_enclosed,
            "paint fully enclosed background cells with symbol 4",
            ("height", "width", "ring count", "ring heights", "ring widths", "noise count"),
            (3, 3),
        ),
        _archetype(
            "move_to_marker",
            _gen_move_to_marker,
            _verify_move_to_marker,
            "translate the object's bounding box onto the marker pixel",
            ("height", "width", "object size"),
            (4, 4),
        ),
        _archetype(
            "symmetry_complete",
            _gen_symmetry_complete,
            _verify_symmetry_complete,
            "restore zeroed right-half columns from their mirror image",
            ("height", "half width", "symbol count", "dropped column count"),
            (1, 2),
        ),
        _archetype(
            "connect_dots",
            _gen_connect_dots,
            _verify_connect_dots,
            "draw the straight line between same-colored endpoint pairs",
            ("height", "width", "pair count", "segment lengths"),
            (2, 2),
        ),
    )
}
