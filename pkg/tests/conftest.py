import random

import pytest
from hypothesis import strategies as st

from cmspace.linalg import Matrix
from cmspace.poly import Poly

small_rationals = st.fractions(min_value=-5, max_value=5, max_denominator=4)


def polys(max_degree=8):
    return st.lists(small_rationals, max_size=max_degree + 1).map(Poly)


def square_matrices(n, elements=small_rationals):
    return st.lists(st.lists(elements, min_size=n, max_size=n),
                    min_size=n, max_size=n).map(Matrix)


def random_unimodular(rng, n, steps=None):
    """Product of elementary integer row operations; det = +-1."""
    rows = [[int(i == j) for j in range(n)] for i in range(n)]
    for _ in range(steps or 3 * n):
        i, j = rng.sample(range(n), 2) if n > 1 else (0, 0)
        if i == j:
            rows[0][0] = -rows[0][0]
            continue
        c = rng.choice([-2, -1, 1, 2])
        rows[i] = [x + c * y for x, y in zip(rows[i], rows[j])]
    if rng.random() < 0.5:
        rows[0] = [-x for x in rows[0]]
    return Matrix(rows)


def random_poly(rng, max_degree=4, lo=-2, hi=2):
    return Poly([rng.randint(lo, hi) for _ in range(rng.randint(0, max_degree) + 1)])


@pytest.fixture
def rng():
    return random.Random(20261016)


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
