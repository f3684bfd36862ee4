import random

import pytest
from hypothesis import strategies as st

from gridforge.grid import Grid


def make_random_grid(rnd: random.Random, max_side: int = 12, symbols=range(10)) -> Grid:
    h = rnd.randint(1, max_side)
    w = rnd.randint(1, max_side)
    pool = list(symbols)
    return Grid(h, w, tuple(rnd.choice(pool) for _ in range(h * w)))


@st.composite
def grids(draw, max_side: int = 8, max_symbol: int = 9):
    h = draw(st.integers(1, max_side))
    w = draw(st.integers(1, max_side))
    cells = draw(
        st.lists(st.integers(0, max_symbol), min_size=h * w, max_size=h * w)
    )
    return Grid(h, w, tuple(cells))


@pytest.fixture
def rnd():
    return random.Random(0xC0FFEE)
