"""Immutable grid values and the transformation primitives shared by all
generators, verifiers and metrics.

Grid model: rectangular, 1..30 cells per side, symbols (cell colors) 0..9.
Cells are stored as a flat row-major tuple so equality, hashing and byte
digests are cheap. Coordinates are (row, col) with the origin at the top
left; rows grow downward, matching the nested-list JSON layout of ARC
files. Every function here is pure: inputs are never mutated.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass
from itertools import chain

MAX_SIDE = 30

# A cell coordinate, a set of coordinates, and a colored pixel set.
Cell = tuple[int, int]
CellSet = frozenset[Cell]
# GridObject pixels are (row, col, symbol); valid objects never repeat a cell.
Pixel = tuple[int, int, int]
GridObject = frozenset[Pixel]


class Grid:
    """Rectangular matrix of symbols 0..9 with 1..30 cells per side.

    ``cells`` is the flat row-major tuple; cell (r, c) lives at index
    ``r * width + c``. Instances are immutable.
    """

    __slots__ = ("height", "width", "cells")

    def __init__(self, height: int, width: int, cells: tuple[int, ...]):
        if not (1 <= height <= MAX_SIDE and 1 <= width <= MAX_SIDE):
            raise ValueError(f"grid dims {height}x{width} outside [1, {MAX_SIDE}]")
        if len(cells) != height * width:
            raise ValueError(f"expected {height * width} cells, got {len(cells)}")
        if min(cells) < 0 or max(cells) > 9:
            raise ValueError("cell symbols must be in 0..9")
        object.__setattr__(self, "height", height)
        object.__setattr__(self, "width", width)
        object.__setattr__(self, "cells", cells)

    def __setattr__(self, name, value):
        raise AttributeError("Grid is immutable")

    def __eq__(self, other):
        return (
            isinstance(other, Grid)
            and self.height == other.height
            and self.width == other.width
            and self.cells == other.cells
        )

    def __hash__(self):
        return hash((self.height, self.width, self.cells))

    def __repr__(self):
        return f"Grid.from_rows({self.to_rows()!r})"

    def at(self, r: int, c: int) -> int:
        return self.cells[r * self.width + c]

    def to_rows(self) -> list[list[int]]:
        """Nested-list form: array of arrays of ints, as in ARC JSON files."""
        w = self.width
        return [list(self.cells[i * w : (i + 1) * w]) for i in range(self.height)]

    @classmethod
    def from_rows(cls, rows: list[list[int]]) -> "Grid":
        if not rows or not rows[0]:
            raise ValueError("grid rows must be non-empty")
        width = len(rows[0])
        for i, row in enumerate(rows):
            if len(row) != width:
                raise ValueError(f"row {i} has length {len(row)}, expected {width}")
        return cls(len(rows), width, tuple(chain.from_iterable(rows)))


def _make(height: int, width: int, cells) -> Grid:
    # Internal fast path for cells already known to be valid symbols.
    g = object.__new__(Grid)
    object.__setattr__(g, "height", height)
    object.__setattr__(g, "width", width)
    object.__setattr__(g, "cells", tuple(cells))
    return g


@dataclass(frozen=True)
class Example:
    """An (input grid, output grid) pair. Dims need not match."""

    input: Grid
    output: Grid


def check_symbol(value: int) -> int:
    """Validate a single symbol value (an int in 0..9) and return it."""
    if not isinstance(value, int) or not (0 <= value <= 9):
        raise ValueError(f"symbol {value!r} not in 0..9")
    return value


def canvas(height: int, width: int, fill: int) -> Grid:
    """Grid of the given dims with every cell set to ``fill``."""
    check_symbol(fill)
    if not (1 <= height <= MAX_SIDE and 1 <= width <= MAX_SIDE):
        raise ValueError(f"grid dims {height}x{width} outside [1, {MAX_SIDE}]")
    return _make(height, width, (fill,) * (height * width))


def hmirror(g: Grid) -> Grid:
    """Reverse row order (flip about the horizontal axis). Involution."""
    w = g.width
    rows = [g.cells[i * w : (i + 1) * w] for i in range(g.height - 1, -1, -1)]
    return _make(g.height, w, chain.from_iterable(rows))


def vmirror(g: Grid) -> Grid:
    """Reverse column order (flip about the vertical axis). Involution."""
    w = g.width
    rows = [g.cells[i * w : (i + 1) * w][::-1] for i in range(g.height)]
    return _make(g.height, w, chain.from_iterable(rows))


def rot90(g: Grid) -> Grid:
    """Clockwise quarter turn; output dims are (width, height)."""
    h, w, cells = g.height, g.width, g.cells
    out = [cells[(h - 1 - c) * w + r] for r in range(w) for c in range(h)]
    return _make(w, h, out)


def rot180(g: Grid) -> Grid:
    return _make(g.height, g.width, g.cells[::-1])


def upscale(g: Grid, fh: int, fw: int) -> Grid:
    """Expand every cell into an fh x fw block of the same symbol."""
    if fh < 1 or fw < 1:
        raise ValueError("upscale factors must be >= 1")
    h, w = g.height * fh, g.width * fw
    if h > MAX_SIDE or w > MAX_SIDE:
        raise ValueError(f"upscaled dims {h}x{w} exceed {MAX_SIDE}")
    out = []
    for i in range(g.height):
        row = g.cells[i * g.width : (i + 1) * g.width]
        wide = tuple(chain.from_iterable((v,) * fw for v in row))
        out.extend(wide * fh)
    return _make(h, w, out)


def palette(g: Grid) -> set[int]:
    """Set of distinct symbols present in the grid."""
    return set(g.cells)


def connected_components(g: Grid, connectivity: int = 4) -> list[GridObject]:
    """Partition the grid into maximal same-symbol connected components.

    Every cell belongs to exactly one returned object; two cells share an
    object iff they hold the same symbol and are connected under the given
    adjacency (4 = edge neighbors, 8 = edge + corner neighbors). The result
    is ordered by each component's topmost-then-leftmost pixel, which is the
    order a row-major scan discovers them in.
    """
    if connectivity not in (4, 8):
        raise ValueError("connectivity must be 4 or 8")
    h, w, cells = g.height, g.width, g.cells
    n = h * w
    seen = bytearray(n)
    comps: list[GridObject] = []
    diag = connectivity == 8
    for start in range(n):
        if seen[start]:
            continue
        color = cells[start]
        seen[start] = 1
        stack = [start]
        member = [start]
        while stack:
            i = stack.pop()
            r, c = divmod(i, w)
            if r > 0:
                j = i - w
                if not seen[j] and cells[j] == color:
                    seen[j] = 1
                    stack.append(j)
                    member.append(j)
            if r + 1 < h:
                j = i + w
                if not seen[j] and cells[j] == color:
                    seen[j] = 1
                    stack.append(j)
                    member.append(j)
            if c > 0:
                j = i - 1
                if not seen[j] and cells[j] == color:
                    seen[j] = 1
                    stack.append(j)
                    member.append(j)
            if c + 1 < w:
                j = i + 1
                if not seen[j] and cells[j] == color:
                    seen[j] = 1
                    stack.append(j)
                    member.append(j)
            if diag:
                for nr, nc in ((r - 1, c - 1), (r - 1, c + 1), (r + 1, c - 1), (r + 1, c + 1)):
                    if 0 <= nr < h and 0 <= nc < w:
                        j = nr * w + nc
                        if not seen[j] and cells[j] == color:
                            seen[j] = 1
                            stack.append(j)
                            member.append(j)
        comps.append(frozenset((i // w, i % w, color) for i in member))
    return comps


def count_components(g: Grid, connectivity: int = 4) -> int:
    """Number of components without materializing pixel sets (hot path)."""
    if connectivity not in (4, 8):
        raise ValueError("connectivity must be 4 or 8")
    h, w, cells = g.height, g.width, g.cells
    n = h * w
    seen = bytearray(n)
    count = 0
    diag = connectivity == 8
    for start in range(n):
        if seen[start]:
            continue
        count += 1
        color = cells[start]
        seen[start] = 1
        stack = [start]
        while stack:
            i = stack.pop()
            r, c = divmod(i, w)
            if r > 0 and not seen[i - w] and cells[i - w] == color:
                seen[i - w] = 1
                stack.append(i - w)
            if r + 1 < h and not seen[i + w] and cells[i + w] == color:
                seen[i + w] = 1
                stack.append(i + w)
            if c > 0 and not seen[i - 1] and cells[i - 1] == color:
                seen[i - 1] = 1
                stack.append(i - 1)
            if c + 1 < w and not seen[i + 1] and cells[i + 1] == color:
                seen[i + 1] = 1
                stack.append(i + 1)
            if diag:
                for nr, nc in ((r - 1, c - 1), (r - 1, c + 1), (r + 1, c - 1), (r + 1, c + 1)):
                    if 0 <= nr < h and 0 <= nc < w:
                        j = nr * w + nc
                        if not seen[j] and cells[j] == color:
                            seen[j] = 1
                            stack.append(j)
    return count


def paint(g: Grid, obj: GridObject, dr: int = 0, dc: int = 0) -> Grid:
    """New grid with the object's pixels, translated by (dr, dc), overwritten.

    Every translated pixel must lie inside the grid; the offending
    coordinate is reported otherwise.
    """
    h, w = g.height, g.width
    buf = list(g.cells)
    for r, c, v in obj:
        rr, cc = r + dr, c + dc
        if not (0 <= rr < h and 0 <= cc < w):
            raise ValueError(f"painted pixel out of bounds at ({rr}, {cc})")
        buf[rr * w + cc] = v
    return _make(h, w, buf)


def enclosed_cells(g: Grid, bg: int) -> CellSet:
    """Background cells unreachable from the border via 4-connected bg moves.

    These are the cells a flood fill started outside the grid could never
    reach: the interiors of closed shapes drawn in non-bg symbols.
    """
    h, w, cells = g.height, g.width, g.cells
    n = h * w
    seen = bytearray(n)
    stack = []
    for c in range(w):
        for i in (c, (h - 1) * w + c):
            if not seen[i] and cells[i] == bg:
                seen[i] = 1
                stack.append(i)
    for r in range(h):
        for i in (r * w, r * w + w - 1):
            if not seen[i] and cells[i] == bg:
                seen[i] = 1
                stack.append(i)
    while stack:
        i = stack.pop()
        r, c = divmod(i, w)
        if r > 0 and not seen[i - w] and cells[i - w] == bg:
            seen[i - w] = 1
            stack.append(i - w)
        if r + 1 < h and not seen[i + w] and cells[i + w] == bg:
            seen[i + w] = 1
            stack.append(i + w)
        if c > 0 and not seen[i - 1] and cells[i - 1] == bg:
            seen[i - 1] = 1
            stack.append(i - 1)
        if c + 1 < w and not seen[i + 1] and cells[i + 1] == bg:
            seen[i + 1] = 1
            stack.append(i + 1)
    return frozenset(
        (i // w, i % w) for i in range(n) if cells[i] == bg and not seen[i]
    )


def canonical_digest(e: Example) -> bytes:
    """16-byte content digest used for deduplication.

    Byte layout hashed: u8 height, u8 width, row-major u8 cells, for the
    input grid then the output grid. Equal examples always map to equal
    digests, on any platform and in any run.
    """
    gi, go = e.input, e.output
    data = (
        bytes((gi.height, gi.width))
        + bytes(gi.cells)
        + bytes((go.height, go.width))
        + bytes(go.cells)
    )
    return hashlib.blake2b(data, digest_size=16).digest()
