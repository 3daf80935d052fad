from fractions import Fraction

import pytest

from hochlinf.barcx import BarCochain
from hochlinf.bardzell import basis_map, format_cochain
from hochlinf.mc import (mc_coefficient, mc_residual, compositions, MCSeries, mc_check_series,
                         mc_residual_dgla, pushforward_mc, associativity_oracle,
                         COEFFICIENT_FAMILIES)
from hochlinf.pathalg import AlgebraError
from hochlinf.transfer import bardzell_engine, PLAIN
from hochlinf import fixtures


def test_coefficients():
    assert [mc_coefficient(n) for n in range(1, 5)] == [1, Fraction(1, 2), Fraction(-1, 6),
                                                        Fraction(-1, 24)]
    assert COEFFICIENT_FAMILIES["exponential"](3) == Fraction(1, 6)


def test_compositions():
    assert sorted(compositions(4, 2, [1, 2, 3])) == [(1, 3), (2, 2), (3, 1)]
    assert list(compositions(3, 3, [1])) == [(1, 1, 1)]
    assert list(compositions(2, 3, [1, 2])) == []


def test_series_validation():
    A = fixtures.rsz2()
    f1, _ = fixtures.rsz2_f(A)
    with pytest.raises(ValueError):
        MCSeries({0: f1})
    with pytest.raises(ValueError):
        MCSeries({1: basis_map(A, "a1", "a1")})
    with pytest.raises(ValueError):
        mc_residual(A, f1, 1)
    with pytest.raises(ValueError):
        mc_residual(A, f1, 3, engine=bardzell_engine(A, PLAIN))


def test_rsz2():
    A = fixtures.rsz2()
    f1, f2 = fixtures.rsz2_f(A)
    res, tail = mc_residual(A, f1 + f2, 4)
    assert res.is_zero() and tail
    rep = mc_check_series(A, MCSeries({1: f1, 2: f2}), 4)
    assert rep["status"] == "pass"
    # f1 t alone fails at order two: nothing cancels 1/2 l_2(f1, f1)
    rep = mc_check_series(A, MCSeries({1: f1}), 2)
    assert rep["status"] == "fail" and rep["residuals"][1].is_zero()
    assert not rep["residuals"][2].is_zero()


@pytest.mark.parametrize("n", [3, 4])
def test_truncated(n):
    A = fixtures.loop_truncated(n)
    f1, f2 = fixtures.loop_truncated_f(A, n)
    assert mc_residual(A, f1 + f2, 4)[0].is_zero()
    assert mc_check_series(A, MCSeries({1: f1, 2: f2}), 4)["status"] == "pass"


def test_rsz1_cocycle_not_mc():
    A = fixtures.rsz1()
    f = fixtures.rsz1_f(A)
    res, _ = mc_residual(A, f, 4)
    assert format_cochain(res) == "(a1 a2 a3 || g)"
    res2, coords = mc_residual_dgla(A, f)
    assert res2 == res == coords


def test_dgla_form_needs_rad_square_zero():
    A = fixtures.quadratic_four()
    with pytest.raises(AlgebraError):
        mc_residual_dgla(A, fixtures.quadratic_four_f(A))


def test_dgla_coordinates_match(algebras):
    for name in ("RSZ1", "RSZ2"):
        A = algebras[name]
        fs = fixtures.rsz2_f(A) if name == "RSZ2" else (fixtures.rsz1_f(A),)
        for f in fs:
            res, coords = mc_residual_dgla(A, f)
            assert res == coords


def test_pushforward_families():
    A = fixtures.rsz2()
    f1, f2 = fixtures.rsz2_f(A)
    rep = pushforward_mc(A, MCSeries({1: f1, 2: f2}), 4)
    assert rep["status"] == "pass" and rep["family"] == "exponential"
    assert rep["tried"] == {"signed": "fail", "exponential": "pass"}
    ok, _ = associativity_oracle(A, rep["series"], 4)
    assert ok


def test_associativity_oracle_basics():
    A = fixtures.rsz1()
    assert associativity_oracle(A, {}, 3) == (True, None)
    a1, a2, b = A.path("a1"), A.path("a2"), A.path("b")
    # a1 * a2 = b at order one is associative here since b a3 = 0 in mu
    m = {1: BarCochain(2, {(a1, a2): {b: 1}})}
    assert associativity_oracle(A, m, 2)[0]
    bad = {1: BarCochain(2, {(a1, a2): {b: 1}, (b, A.path("a3")): {A.path("g"): 1}})}
    assert associativity_oracle(A, bad, 1)[0]
    ok, where = associativity_oracle(A, bad, 2)
    assert not ok and where == (2, a1, a2, A.path("a3"))
    with pytest.raises(ValueError):
        associativity_oracle(A, {0: m[1]}, 1)
