from fractions import Fraction

import sympy
from hypothesis import given, settings, strategies as st

from hochlinf.exactcore import SparseMatrix, rank, rank_and_kernel, solve, scalar

entries = st.integers(-3, 3).map(Fraction) | st.fractions(min_value=-2, max_value=2, max_denominator=5)


@st.composite
def matrices(draw, max_dim=6):
    r = draw(st.integers(0, max_dim))
    c = draw(st.integers(1, max_dim))
    data = [[draw(st.sampled_from([0, 0, 0]) | entries) for _ in range(c)] for _ in range(r)]
    return data, c


def test_scalar_coercion():
    assert scalar("-3/2") == Fraction(-3, 2)
    assert scalar(4) == 4
    m = SparseMatrix(2, 2)
    m[0, 1] = "1/3"
    m[0, 1] = 0
    assert m.entries == {}


@settings(max_examples=80, deadline=None)
@given(matrices())
def test_rank_matches_sympy(mc):
    data, c = mc
    m = SparseMatrix.from_dense(data, cols=c)
    want = sympy.Matrix(len(data), c, [sympy.Rational(x.numerator, x.denominator)
                                        for row in data for x in map(Fraction, row)]).rank() if data else 0
    assert rank(m) == want


@settings(max_examples=80, deadline=None)
@given(matrices())
def test_kernel_is_a_kernel(mc):
    data, c = mc
    m = SparseMatrix.from_dense(data, cols=c)
    r, ker = rank_and_kernel(m)
    assert r + len(ker) == c
    for v in ker:
        assert all(x == 0 for x in m.apply(v))
    if ker:
        assert rank(SparseMatrix.from_dense(ker)) == len(ker)


@settings(max_examples=60, deadline=None)
@given(matrices(), st.lists(st.integers(-3, 3), min_size=6, max_size=6))
def test_solve_consistent_systems(mc, x0):
    data, c = mc
    m = SparseMatrix.from_dense(data, cols=c)
    b = m.apply([Fraction(v) for v in x0[:c]])
    x = solve(m, b)
    assert x is not None and m.apply(x) == b


def test_solve_detects_inconsistency():
    m = SparseMatrix.from_dense([[1, 1], [2, 2]])
    assert solve(m, [1, 3]) is None
    assert solve(m, [1, 2]) == [1, 0]


def test_identity_and_permutation():
    m = SparseMatrix.identity(3)
    assert rank(m) == 3
    p = m.permute_rows([2, 0, 1])
    assert p[0, 2] == 1 and p[1, 0] == 1
