from fractions import Fraction as F

import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from poleorder.linalg import EchelonSpace, dense_rank, solve_unique

entries = st.fractions(min_value=-4, max_value=4, max_denominator=3)


@settings(max_examples=80, deadline=None)
@given(st.integers(1, 6), st.integers(1, 6), st.data())
def test_rank_matches_sympy(m, n, data):
    rows = [[data.draw(st.sampled_from([0, 0, 1, -2]) | entries) for _ in range(n)] for _ in range(m)]
    assert dense_rank(rows) == sympy.Matrix(rows).rank()


@settings(max_examples=60, deadline=None)
@given(st.lists(st.lists(entries, min_size=4, max_size=4), min_size=1, max_size=4),
       st.lists(entries, min_size=4, max_size=4))
def test_contains_iff_rank_unchanged(rows, v):
    space = EchelonSpace({j: x for j, x in enumerate(r)} for r in rows)
    vec = {j: x for j, x in enumerate(v)}
    expected = sympy.Matrix(rows + [v]).rank() == sympy.Matrix(rows).rank()
    assert space.contains(vec) == expected


def test_solve_unique_cases():
    assert solve_unique([[3, 0, 0], [0, 3, 0], [0, 0, 3]], [1, 1, 1]) == (F(1, 3),) * 3
    # overdetermined and inconsistent
    assert solve_unique([[4, 0, 0], [0, 4, 0], [0, 0, 4], [1, 1, 1]], [1, 1, 1, 1]) is None
    # underdetermined
    assert solve_unique([[2, 1, 0]], [1]) is None
    # overdetermined but consistent
    assert solve_unique([[2, 0], [0, 3], [2, 3]], [1, 1, 2]) == (F(1, 2), F(1, 3))
