from itertools import product

import pytest

from hochlinf.pathalg import (Quiver, MonomialAlgebra, AlgebraError, NotFiniteDimensional,
                              truncated_algebra, format_element, Path)
from hochlinf import fixtures


def brute_basis(A, max_len):
    """Every walk of length <= max_len containing no relation as a factor."""
    q = A.quiver
    rels = {r.arrows for r in A.relations}
    out = {q.trivial(v) for v in q.vertices}
    for n in range(1, max_len + 1):
        for word in product(q.arrows, repeat=n):
            if any(q.arrows[x].target != q.arrows[y].source for x, y in zip(word, word[1:])):
                continue
            if any(word[i:j] in rels for i in range(n) for j in range(i + 2, n + 1)):
                continue
            out.add(q.path(list(word)))
    return out


@pytest.mark.parametrize("make", [fixtures.line3, fixtures.quadratic_four, fixtures.rsz2,
                                  lambda: fixtures.loop_truncated(3), fixtures.j4_small])
def test_basis_against_enumeration(make):
    A = make()
    assert set(A.basis) == brute_basis(A, A.max_path_length + 1)
    assert len(set(A.basis)) == len(A.basis)


def test_dimensions():
    assert len(fixtures.line3().basis) == 7
    # e1 e2 a b aa ab
    assert len(fixtures.loop_truncated(3).basis) == 6
    assert len(fixtures.loop_truncated(4).basis) == 8
    assert fixtures.rsz1().is_radical_square_zero()
    assert not fixtures.quadratic_four().is_radical_square_zero()


def test_products():
    A = fixtures.quadratic_four()
    a1, b, g = A.path("a1"), A.path("b"), A.path("g")
    assert A.path_product(a1, b) == A.path("a1 b")
    assert A.path_product(b, g) is None
    assert A.path_product(A.e("2"), b) == b
    assert A.path_product(b, a1) is None
    x = {a1: 2}
    assert A.multiply(x, A.elem("b")) == {A.path("a1 b"): 2}
    assert A.multiply(A.one(), x) == x


def test_not_admissible():
    q = Quiver("1", [("x", 1, 1)])
    with pytest.raises(NotFiniteDimensional):
        MonomialAlgebra(q, [])
    q = Quiver("1", [("x", 1, 1), ("y", 1, 1)])
    with pytest.raises(NotFiniteDimensional):
        MonomialAlgebra(q, ["x x", "y y"])
    q = Quiver("12", [("x", 1, 2), ("y", 2, 1)])
    assert len(MonomialAlgebra(q, ["x y"]).basis) == 5


def test_bad_relations():
    q = Quiver("123", [("a", 1, 2), ("b", 2, 3)])
    with pytest.raises(AlgebraError):
        MonomialAlgebra(q, ["a"])
    with pytest.raises(AlgebraError):
        MonomialAlgebra(q, ["b a"])
    q = Quiver("1234", [("a", 1, 2), ("b", 2, 3), ("c", 3, 4)])
    with pytest.raises(AlgebraError, match="not minimal"):
        MonomialAlgebra(q, ["a b", "a b c"])


def test_bad_quivers():
    with pytest.raises(AlgebraError):
        Quiver("11", [])
    with pytest.raises(AlgebraError):
        Quiver("12", [("a", 1, 3)])
    with pytest.raises(AlgebraError):
        Quiver("12", [("e1", 1, 2)])
    with pytest.raises(AlgebraError):
        truncated_algebra(Quiver("1", [("x", 1, 1)]), 1)


def test_subpaths_and_format():
    A = fixtures.j3_line()
    p = A.path("a1 a2 a3 a4")
    assert p.sub(1, 3, A.quiver) == A.path("a2 a3")
    assert p.sub(2, 2, A.quiver) == A.e("3")
    assert str(A.e("4")) == "e4"
    assert format_element({A.path("a1"): 2, A.e("1"): -1}) == "-e1 + 2 a1"
    assert format_element({}) == "0"
    assert isinstance(p, Path) and len(p) == 4
