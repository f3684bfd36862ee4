from itertools import combinations

import pytest

from gridforge.grid import canvas, connected_components, paint
from gridforge.objects import (
    ShapeBudget,
    candidate_positions,
    colorize,
    object_bbox,
    place_rejection,
    sample_shape,
)
from gridforge.rng import TracedRng

from conftest import make_random_grid


# --- oracles -----------------------------------------------------------------


def oracle_shapes(num_pixels, max_h, max_w, connectivity=4):
    """Every normalized connected shape of the given size fitting the box,
    by brute-force enumeration of cell subsets."""
    box = [(r, c) for r in range(max_h) for c in range(max_w)]

    def connected(cells):
        cells = set(cells)
        seen = {next(iter(cells))}
        frontier = list(seen)
        while frontier:
            r, c = frontier.pop()
            if connectivity == 4:
                nbrs = ((r - 1, c), (r + 1, c), (r, c - 1), (r, c + 1))
            else:
                nbrs = [
                    (r + dr, c + dc)
                    for dr in (-1, 0, 1)
                    for dc in (-1, 0, 1)
                    if (dr, dc) != (0, 0)
                ]
            for nbr in nbrs:
                if nbr in cells and nbr not in seen:
                    seen.add(nbr)
                    frontier.append(nbr)
        return len(seen) == len(cells)

    def normalize(cells):
        mr = min(r for r, _ in cells)
        mc = min(c for _, c in cells)
        return frozenset((r - mr, c - mc) for r, c in cells)

    return {normalize(s) for s in combinations(box, num_pixels) if connected(s)}


def oracle_valid_offsets(g, obj, bg):
    """Brute-force check of every conceivable offset against the placement
    validity predicate: in bounds and covering only bg cells."""
    out = []
    for dr in range(-35, 35):
        for dc in range(-35, 35):
            ok = True
            for r, c, _ in obj:
                rr, cc = r + dr, c + dc
                if not (0 <= rr < g.height and 0 <= cc < g.width):
                    ok = False
                    break
                if g.at(rr, cc) != bg:
                    ok = False
                    break
            if ok:
                out.append((dr, dc))
    return out


# --- shape budget ------------------------------------------------------------


def test_budget_rejects_impossible_size():
    with pytest.raises(ValueError):
        ShapeBudget(5, 2, 2)
    with pytest.raises(ValueError):
        ShapeBudget(0, 3, 3)
    with pytest.raises(ValueError):
        ShapeBudget(2, 2, 2, connectivity=6)


# --- sample_shape ------------------------------------------------------------


def test_single_pixel_shape_is_origin():
    rng = TracedRng(0)
    assert sample_shape(rng, ShapeBudget(1, 5, 5)) == frozenset({(0, 0)})


def test_forced_line_shape():
    rng = TracedRng(1)
    for _ in range(50):
        shape = sample_shape(rng, ShapeBudget(4, 1, 4))
        assert shape == frozenset({(0, 0), (0, 1), (0, 2), (0, 3)})


def test_all_l_triominoes_occur():
    expected = oracle_shapes(3, 2, 2)
    assert len(expected) == 4
    rng = TracedRng(2)
    seen = set()
    for _ in range(10_000):
        seen.add(sample_shape(rng, ShapeBudget(3, 2, 2)))
    assert seen == expected


def test_shapes_are_connected_and_sized(rnd):
    rng = TracedRng(3)
    for _ in range(200):
        max_h = rnd.randint(1, 8)
        max_w = rnd.randint(1, 8)
        n = rnd.randint(1, min(12, max_h * max_w))
        conn = rnd.choice((4, 8))
        shape = sample_shape(rng, ShapeBudget(n, max_h, max_w, conn))
        assert len(shape) == n
        assert min(r for r, _ in shape) == 0
        assert min(c for _, c in shape) == 0
        assert max(r for r, _ in shape) < max_h
        assert max(c for _, c in shape) < max_w
        # paint onto a canvas and confirm it forms one component
        g = paint(canvas(10, 10, 0), frozenset((r, c, 5) for r, c in shape))
        nonbg = [
            comp
            for comp in connected_components(g, conn)
            if any(v == 5 for _, _, v in comp)
        ]
        assert len(nonbg) == 1


# --- colorize ----------------------------------------------------------------


def test_colorize_single_color_any_mode():
    rng = TracedRng(4)
    shape = frozenset({(0, 0), (0, 1)})
    for mode in ("uniform", "per_pixel"):
        obj = colorize(rng, shape, {7}, mode)
        assert {v for _, _, v in obj} == {7}


def test_colorize_uniform_single_palette():
    rng = TracedRng(5)
    shape = sample_shape(rng, ShapeBudget(8, 4, 4))
    for _ in range(50):
        obj = colorize(rng, shape, {1, 2, 3, 4}, "uniform")
        assert len({v for _, _, v in obj}) == 1


def test_colorize_per_pixel_mixes_colors():
    rng = TracedRng(6)
    shape = sample_shape(rng, ShapeBudget(20, 5, 5))
    both = 0
    trials = 1000
    for _ in range(trials):
        obj = colorize(rng, shape, {1, 2}, "per_pixel")
        if {v for _, _, v in obj} == {1, 2}:
            both += 1
    # chance of a single-color draw is 2 * 2^-20 per trial
    assert both / trials > 0.99


def test_colorize_rejects_empty_colors():
    with pytest.raises(ValueError):
        colorize(TracedRng(7), frozenset({(0, 0)}), set(), "uniform")


def test_colorize_rejects_unknown_mode():
    with pytest.raises(ValueError):
        colorize(TracedRng(8), frozenset({(0, 0)}), {1}, "rainbow")


# --- place_rejection ---------------------------------------------------------


def test_rejection_single_pixel_covers_all_offsets():
    g = canvas(5, 5, 0)
    dot = frozenset({(0, 0, 3)})
    rng = TracedRng(9)
    seen = set()
    for _ in range(10_000):
        offset = place_rejection(rng, g, dot, 0, 10)
        assert offset is not None
        seen.add(offset)
    assert seen == {(r, c) for r in range(5) for c in range(5)}


def test_rejection_fails_on_full_grid():
    g = canvas(3, 3, 2)
    rng = TracedRng(10)
    assert place_rejection(rng, g, frozenset({(0, 0, 1)}), 0, 25) is None


def test_rejection_exact_fit_is_origin():
    g = canvas(2, 3, 0)
    obj = frozenset((r, c, 1) for r in range(2) for c in range(3))
    assert place_rejection(TracedRng(11), g, obj, 0, 5) == (0, 0)


def test_rejection_oversized_object_fails_immediately():
    g = canvas(2, 2, 0)
    obj = frozenset((r, 0, 1) for r in range(3))
    assert place_rejection(TracedRng(12), g, obj, 0, 5) is None


def test_rejection_accepted_offsets_cover_only_bg(rnd):
    rng = TracedRng(13)
    for _ in range(100):
        g = make_random_grid(rnd, max_side=8, symbols=(0, 0, 0, 1, 2))
        shape = sample_shape(rng, ShapeBudget(rnd.randint(1, 4), 3, 3))
        obj = colorize(rng, shape, {5}, "uniform")
        offset = place_rejection(rng, g, obj, 0, 30)
        if offset is None:
            continue
        dr, dc = offset
        painted = paint(g, obj, dr, dc)
        changed = [
            i for i, (a, b) in enumerate(zip(g.cells, painted.cells)) if a != b
        ]
        assert all(g.cells[i] == 0 for i in changed)
        covered = [(r + dr, c + dc) for r, c, _ in obj]
        assert all(g.at(r, c) == 0 for r, c in covered)


# --- candidate_positions -----------------------------------------------------


def test_candidates_single_pixel_blank_grid():
    got = candidate_positions(canvas(3, 3, 0), frozenset({(0, 0, 1)}), 0)
    assert got == [(r, c) for r in range(3) for c in range(3)]


def test_candidates_empty_when_object_too_tall():
    obj = frozenset((r, 0, 1) for r in range(4))
    assert candidate_positions(canvas(3, 3, 0), obj, 0) == []


def test_candidates_respect_predicate():
    got = candidate_positions(
        canvas(3, 3, 0), frozenset({(0, 0, 1)}), 0, lambda dr, dc: dr == dc
    )
    assert got == [(0, 0), (1, 1), (2, 2)]


def test_candidates_match_validity_oracle(rnd):
    rng = TracedRng(14)
    for _ in range(100):
        g = make_random_grid(rnd, max_side=7, symbols=(0, 0, 1, 2))
        shape = sample_shape(rng, ShapeBudget(rnd.randint(1, 5), 3, 3))
        obj = colorize(rng, shape, {4, 6}, "per_pixel")
        assert candidate_positions(g, obj, 0) == oracle_valid_offsets(g, obj, 0)


def test_rejection_results_always_in_candidate_set(rnd):
    rng = TracedRng(15)
    for _ in range(100):
        g = make_random_grid(rnd, max_side=6, symbols=(0, 0, 0, 3))
        shape = sample_shape(rng, ShapeBudget(rnd.randint(1, 4), 2, 3))
        obj = colorize(rng, shape, {7}, "uniform")
        cands = set(candidate_positions(g, obj, 0))
        offset = place_rejection(rng, g, obj, 0, 40)
        if offset is not None:
            assert offset in cands
        bbox = object_bbox(obj)
        assert bbox[0] == 0 and bbox[1] == 0
