import pytest
from hypothesis import given, settings

from gridforge.grid import (
    Example,
    Grid,
    canonical_digest,
    canvas,
    connected_components,
    count_components,
    enclosed_cells,
    hmirror,
    paint,
    palette,
    rot90,
    upscale,
    vmirror,
)

from conftest import grids, make_random_grid


# --- independent oracles -----------------------------------------------------


def oracle_components(rows, connectivity):
    """Label propagation to fixpoint: each cell starts with a unique label,
    then repeatedly adopts the smallest label among same-colored neighbors."""
    h, w = len(rows), len(rows[0])
    if connectivity == 4:
        moves = [(-1, 0), (1, 0), (0, -1), (0, 1)]
    else:
        moves = [(dr, dc) for dr in (-1, 0, 1) for dc in (-1, 0, 1) if (dr, dc) != (0, 0)]
    labels = {(r, c): r * w + c for r in range(h) for c in range(w)}
    changed = True
    while changed:
        changed = False
        for r in range(h):
            for c in range(w):
                for dr, dc in moves:
                    nr, nc = r + dr, c + dc
                    if 0 <= nr < h and 0 <= nc < w and rows[nr][nc] == rows[r][c]:
                        if labels[(nr, nc)] < labels[(r, c)]:
                            labels[(r, c)] = labels[(nr, nc)]
                            changed = True
    groups = {}
    for cell, label in labels.items():
        groups.setdefault(label, set()).add(cell)
    return sorted(frozenset(g) for g in groups.values())


def oracle_enclosed(rows, bg):
    """Set-based BFS from every border background cell; enclosed = the rest."""
    h, w = len(rows), len(rows[0])
    seen = set()
    frontier = [
        (r, c)
        for r in range(h)
        for c in range(w)
        if (r in (0, h - 1) or c in (0, w - 1)) and rows[r][c] == bg
    ]
    seen.update(frontier)
    while frontier:
        r, c = frontier.pop()
        for nr, nc in ((r - 1, c), (r + 1, c), (r, c - 1), (r, c + 1)):
            if 0 <= nr < h and 0 <= nc < w and (nr, nc) not in seen and rows[nr][nc] == bg:
                seen.add((nr, nc))
                frontier.append((nr, nc))
    return {
        (r, c)
        for r in range(h)
        for c in range(w)
        if rows[r][c] == bg and (r, c) not in seen
    }


# --- construction ------------------------------------------------------------


def test_canvas_smallest():
    assert canvas(1, 1, 0).to_rows() == [[0]]


def test_canvas_fill():
    assert canvas(2, 3, 5).to_rows() == [[5, 5, 5], [5, 5, 5]]


def test_canvas_rejects_zero_height():
    with pytest.raises(ValueError):
        canvas(0, 4, 1)


def test_canvas_rejects_oversize():
    with pytest.raises(ValueError):
        canvas(31, 1, 0)


def test_grid_rejects_bad_symbol():
    with pytest.raises(ValueError):
        Grid(1, 1, (10,))


def test_grid_rejects_wrong_cell_count():
    with pytest.raises(ValueError):
        Grid(2, 2, (1, 2, 3))


def test_grid_rejects_ragged_rows():
    with pytest.raises(ValueError):
        Grid.from_rows([[1, 2], [3]])


def test_grid_is_immutable():
    g = canvas(2, 2, 0)
    with pytest.raises(AttributeError):
        g.height = 5


def test_round_trip_rows():
    rows = [[1, 2, 3], [4, 5, 6]]
    assert Grid.from_rows(rows).to_rows() == rows


# --- mirrors and rotation ----------------------------------------------------


def test_hmirror_definition():
    assert hmirror(Grid.from_rows([[1], [2]])).to_rows() == [[2], [1]]


def test_hmirror_single_row_fixed_point():
    g = Grid.from_rows([[3]])
    assert hmirror(g) == g


def test_vmirror_definition():
    assert vmirror(Grid.from_rows([[1, 2]])).to_rows() == [[2, 1]]


def test_vmirror_single_col_fixed_point():
    g = Grid.from_rows([[7]])
    assert vmirror(g) == g


def test_rot90_definition():
    assert rot90(Grid.from_rows([[1, 2], [3, 4]])).to_rows() == [[3, 1], [4, 2]]


def test_rot90_column():
    assert rot90(Grid.from_rows([[1], [2]])).to_rows() == [[2, 1]]


@given(grids())
def test_mirrors_are_involutions(g):
    assert hmirror(hmirror(g)) == g
    assert vmirror(vmirror(g)) == g


@given(grids())
def test_rot90_four_times_is_identity(g):
    assert rot90(rot90(rot90(rot90(g)))) == g


@given(grids())
def test_vmirror_rot_composition(g):
    # vmirror = rot90 . hmirror . rot90^-1
    rot270 = lambda x: rot90(rot90(rot90(x)))
    assert vmirror(g) == rot90(hmirror(rot270(g)))


def test_mirror_purity(rnd):
    g = make_random_grid(rnd)
    before = g.cells
    hmirror(g)
    vmirror(g)
    rot90(g)
    assert g.cells == before


# --- upscale -----------------------------------------------------------------


def test_upscale_definition():
    assert upscale(Grid.from_rows([[1]]), 2, 2).to_rows() == [[1, 1], [1, 1]]


def test_upscale_identity_factor(rnd):
    g = make_random_grid(rnd)
    assert upscale(g, 1, 1) == g


def test_upscale_row():
    assert upscale(Grid.from_rows([[1, 2]]), 1, 2).to_rows() == [[1, 1, 2, 2]]


def test_upscale_rejects_oversize():
    with pytest.raises(ValueError):
        upscale(canvas(16, 1, 0), 2, 1)


# --- palette -----------------------------------------------------------------


def test_palette_single():
    assert palette(Grid.from_rows([[0]])) == {0}


def test_palette_pair():
    assert palette(Grid.from_rows([[1, 2], [2, 1]])) == {1, 2}


def test_palette_canvas():
    assert palette(canvas(5, 5, 3)) == {3}


# --- connected components ----------------------------------------------------


def test_single_cell_component():
    comps = connected_components(Grid.from_rows([[5]]))
    assert comps == [frozenset({(0, 0, 5)})]


def test_checkerboard_has_four_components():
    comps = connected_components(Grid.from_rows([[1, 2], [2, 1]]), 4)
    assert len(comps) == 4


def test_components_match_label_propagation_oracle(rnd):
    for _ in range(40):
        g = make_random_grid(rnd, max_side=10, symbols=(0, 1, 2))
        rows = g.to_rows()
        for conn in (4, 8):
            got = sorted(
                frozenset((r, c) for r, c, _ in comp)
                for comp in connected_components(g, conn)
            )
            assert got == oracle_components(rows, conn)


@given(grids(max_side=6, max_symbol=2))
@settings(max_examples=60)
def test_components_partition_grid(g):
    comps = connected_components(g, 4)
    cells = [(r, c) for comp in comps for r, c, _ in comp]
    assert len(cells) == g.height * g.width
    assert len(set(cells)) == len(cells)
    for comp in comps:
        symbols = {v for _, _, v in comp}
        assert len(symbols) == 1


@given(grids(max_side=6, max_symbol=2))
@settings(max_examples=60)
def test_conn4_count_at_least_conn8(g):
    assert len(connected_components(g, 4)) >= len(connected_components(g, 8))


def test_components_ordered_by_topmost_leftmost(rnd):
    for _ in range(20):
        g = make_random_grid(rnd, max_side=8, symbols=(0, 1))
        comps = connected_components(g, 4)
        anchors = [min((r, c) for r, c, _ in comp) for comp in comps]
        assert anchors == sorted(anchors)


def test_count_components_agrees_with_full_listing(rnd):
    for _ in range(30):
        g = make_random_grid(rnd, max_side=10, symbols=(0, 1, 2))
        for conn in (4, 8):
            assert count_components(g, conn) == len(connected_components(g, conn))


def test_components_reject_bad_connectivity():
    with pytest.raises(ValueError):
        connected_components(canvas(1, 1, 0), 5)


# --- paint -------------------------------------------------------------------


def test_paint_definition():
    g = paint(canvas(2, 2, 0), frozenset({(0, 0, 3)}), 1, 1)
    assert g.to_rows() == [[0, 0], [0, 3]]


def test_paint_empty_object_is_identity():
    g = canvas(3, 3, 2)
    assert paint(g, frozenset()) == g


def test_paint_out_of_bounds_reports_coordinate():
    with pytest.raises(ValueError, match=r"\(0, 1\)"):
        paint(canvas(1, 1, 0), frozenset({(0, 0, 1)}), 0, 1)


def test_paint_read_back(rnd):
    for _ in range(30):
        g = make_random_grid(rnd, max_side=8)
        obj = frozenset({(0, 0, 9), (0, 1, 8)})
        if g.width < 2:
            continue
        dr = rnd.randint(0, g.height - 1)
        dc = rnd.randint(0, g.width - 2)
        before = g.cells
        painted = paint(g, obj, dr, dc)
        assert painted.at(dr, dc) == 9
        assert painted.at(dr, dc + 1) == 8
        assert g.cells == before  # purity


# --- enclosed cells ----------------------------------------------------------


def test_enclosed_empty_on_blank_canvas():
    assert enclosed_cells(canvas(3, 3, 0), 0) == frozenset()


def test_enclosed_ring_center():
    g = Grid.from_rows([[1, 1, 1], [1, 0, 1], [1, 1, 1]])
    assert enclosed_cells(g, 0) == frozenset({(1, 1)})


def test_enclosed_matches_border_bfs_oracle(rnd):
    for _ in range(60):
        g = make_random_grid(rnd, max_side=12, symbols=(0, 0, 0, 1))
        assert set(enclosed_cells(g, 0)) == oracle_enclosed(g.to_rows(), 0)


# --- canonical digest --------------------------------------------------------


def test_digest_deterministic(rnd):
    g = make_random_grid(rnd)
    e = Example(g, hmirror(g))
    assert canonical_digest(e) == canonical_digest(e)


def test_digest_single_cell_difference(rnd):
    for _ in range(1000):
        g = make_random_grid(rnd, max_side=6)
        i = rnd.randrange(len(g.cells))
        cells = list(g.cells)
        cells[i] = (cells[i] + 1 + rnd.randrange(9)) % 10
        g2 = Grid(g.height, g.width, tuple(cells))
        assert canonical_digest(Example(g, g)) != canonical_digest(Example(g2, g))


def test_digest_value_semantics():
    a = Example(Grid.from_rows([[1, 2]]), Grid.from_rows([[2, 1]]))
    b = Example(Grid(1, 2, (1, 2)), vmirror(Grid(1, 2, (1, 2))))
    assert canonical_digest(a) == canonical_digest(b)


def test_digest_layout_frozen():
    # Pins the byte layout (u8 dims + row-major u8 cells, input then output);
    # changing it would silently break cross-release dedup.
    e = Example(Grid.from_rows([[1, 2], [3, 4]]), Grid.from_rows([[5]]))
    assert canonical_digest(e).hex() == "a04943ba4d520ec4f0a515e612a24d6b"


def test_digest_is_16_bytes(rnd):
    g = make_random_grid(rnd)
    assert len(canonical_digest(Example(g, g))) == 16
