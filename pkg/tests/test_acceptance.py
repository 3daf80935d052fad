"""
Acceptance criteria 1-10, run exactly.  Each criterion prints one line
``criterion N: PASS|FAIL (seconds, budget)``.

    pytest -s tests/test_acceptance.py
    python3 tests/test_acceptance.py
"""

import random
import sys
import time
from fractions import Fraction

import pytest

from hochlinf import fixtures
from hochlinf.barcx import enum_bar_basis, bar_d
from hochlinf.bardzell import (compute_AP, brute_force_AP, basis_map, delta_cochain,
                               delta_chain, resolution_d, random_bardzell_cochain)
from hochlinf.compare import verify_contraction
from hochlinf.gerst import hh_dim, hh_dim_bar
from hochlinf.mc import (mc_residual, MCSeries, mc_check_series, pushforward_mc,
                         associativity_oracle, pushforward_series)
from hochlinf.transfer import (bardzell_engine, PLAIN, SHIFTED, jacobi_residual,
                               weak_morphism_residual, skew_defect, phi_v_residual,
                               induction_residual)


class Checks:
    """Collects named boolean checks; a criterion passes when all hold."""

    def __init__(self):
        self.failed = []
        self.count = 0

    def __call__(self, ok, what):
        self.count += 1
        if not ok:
            self.failed.append(what)


def random_args(A, rng, n, degrees=(1, 2, 3), density=0.4):
    degrees = [d for d in degrees if compute_AP(A, d)]
    return tuple(random_bardzell_cochain(A, rng.choice(degrees), rng, density=density)
                 for _ in range(n))


def random_nonzero(A, rng, degree):
    while True:
        f = random_bardzell_cochain(A, degree, rng, density=0.6)
        if not f.is_zero():
            return f


def power_values(A, f, arities):
    E = bardzell_engine(A, PLAIN)
    return {n: E.l([f] * n) for n in arities}


# -- the criteria -------------------------------------------------------------------

def criterion_1(check):
    A = fixtures.quadratic_six()
    f = fixtures.quadratic_six_f(A)
    target = basis_map(A, "a1 a2 a3", "a1 m g2")
    ls = power_values(A, f, range(2, 7))
    for n in (2, 4, 5):
        check(ls[n].is_zero(), "l_%d(f^%d) = 0" % (n, n))
    check(ls[3] == 6 * target, "l_3 = 6 (a1 a2 a3 || a1 m g2)")
    check(ls[6] == 720 * target, "l_6 = 720 (a1 a2 a3 || a1 m g2)")


def criterion_2(check):
    A = fixtures.quadratic_four()
    f = fixtures.quadratic_four_f(A)
    target = basis_map(A, "a1 a2 a3", "a1 b a3")
    ls = power_values(A, f, range(2, 6))
    check(ls[2].is_zero() and ls[4].is_zero(), "l_2 = l_4 = 0")
    check(ls[3] == -6 * target, "l_3 = -6 (a1 a2 a3 || a1 b a3)")
    check(ls[5] == 120 * target, "l_5 = +120 (a1 a2 a3 || a1 b a3)")


def criterion_3(check):
    A = fixtures.j3_line()
    f1, f2, f3 = fixtures.j3_line_f(A)
    E = bardzell_engine(A, PLAIN)
    l3 = E.l([f1, f2, f3])
    w = A.path("a1 a2 a3 a4 a5 a6")
    check(l3.value(w) == {A.path("m"): -1}, "l_3(f1, f2, f3)(a1..a6) = -m")
    check(l3 == basis_map(A, w, "m", -1), "no other coefficients")
    (c,) = compute_AP(A, 4)
    check(c.support == w, "AP_4 = {a1..a6}")
    check(tuple(s for s, _ in c.occurrences) == (0, 1, 3), "offsets (0, 1, 3)")


def criterion_4(check):
    rng = random.Random(404)
    for make in (fixtures.rsz1, fixtures.rsz2):
        A = make()
        E = bardzell_engine(A, PLAIN)
        for k in range(50):
            a = random_args(A, rng, 4)
            check(E.l(a[:3]).is_zero(), "%s l_3 tuple %d" % (A.name, k))
            check(E.l(a).is_zero(), "%s l_4 tuple %d" % (A.name, k))
        for k in range(50):
            a = random_args(A, rng, 3)
            check(jacobi_residual(E, a).is_zero(), "%s Jacobi triple %d" % (A.name, k))


def criterion_5(check):
    A = fixtures.rsz2()
    f1, f2 = fixtures.rsz2_f(A)
    E = bardzell_engine(A, PLAIN)
    w1, w2 = A.path("a1 a2 a3"), A.path("a2 a1 a4")
    a3, a4 = A.path("a3"), A.path("a4")
    d2 = delta_cochain(A, f2)
    check(d2.value(w1) == {a3: -1}, "delta^2 f2 (a1 a2, a2 a3) = -a3")
    check(d2.value(w2) == {a4: -1}, "delta^2 f2 (a2 a1, a1 a4) = -a4")
    l2 = E.l([f1, f1])
    check(l2.value(w1) == {a3: -2}, "l_2(f1, f1)(a1 a2, a2 a3) = -2 a3")
    check(l2.value(w2) == {a4: -2}, "l_2(f1, f1)(a2 a1, a1 a4) = -2 a4")
    others = [c.support for c in compute_AP(A, 3) if c.support not in (w1, w2)]
    check(others and all(not d2.value(w) and not l2.value(w) for w in others),
          "0 on the remaining AP_3 basis")
    check(mc_residual(A, f1 + f2, 4)[0].is_zero(), "f1 + f2 is MC")
    check(mc_check_series(A, MCSeries({1: f1, 2: f2}), 4)["status"] == "pass",
          "f1 t + f2 t^2 MC to order 4")
    B = fixtures.rsz1()
    f = fixtures.rsz1_f(B)
    EB = bardzell_engine(B, PLAIN)
    check(EB.l([f]).is_zero(), "RSZ1 f is a cocycle")
    l2f = EB.l([f, f])
    check(l2f == basis_map(B, "a1 a2 a3", "g", 2), "l_2(f, f)(a1 a2, a2 a3) = 2 g")
    check(not mc_residual(B, f, 4)[0].is_zero(), "RSZ1 f is not MC")


def criterion_6(check):
    rng = random.Random(606)
    for A in (fixtures.loop_truncated(3), fixtures.loop_truncated(4), fixtures.j3_line(),
              fixtures.j4_small()):
        E = bardzell_engine(A, PLAIN)
        for k in range(30):
            a = tuple(random_nonzero(A, rng, 2) for _ in range(4))
            check(E.l(a[:3]).is_zero(), "%s l_3 on degree-1 tuple %d" % (A.name, k))
            check(E.l(a).is_zero(), "%s l_4 on degree-1 tuple %d" % (A.name, k))
    for n in (3, 4):
        A = fixtures.loop_truncated(n)
        f1, f2 = fixtures.loop_truncated_f(A, n)
        E = bardzell_engine(A, PLAIN)
        w = A.path(["a"] * n)
        want = {A.path(["a"] * (n - 2) + ["b"]): -1}
        # the AP_3 element alpha^n followed by beta
        w3 = A.path(["a"] * n + ["b"])
        check(delta_cochain(A, f2).value(w3) == want, "TRUNC%d delta^2 f2" % n)
        check(E.l([f1, f1]).value(w3) == {p: 2 * c for p, c in want.items()},
              "TRUNC%d l_2(f1, f1)" % n)
        check(mc_residual(A, f1 + f2, 4)[0].is_zero(), "TRUNC%d f1 + f2 MC" % n)
        check(mc_check_series(A, MCSeries({1: f1, 2: f2}), 4)["status"] == "pass",
              "TRUNC%d series MC to order 4" % n)
        check(w in {c.support for c in compute_AP(A, 2)}, "TRUNC%d alpha^n in AP_2" % n)


def h1_closed_form(A, p):
    q, n = A.quiver, len(p)
    return {(A.e(p.source), (p.sub(0, i - 1, q), p.sub(i - 1, i, q)), p.sub(i, n, q)): Fraction(1)
            for i in range(2, n + 1)}


def criterion_7(check):
    names = ["Id = s d + d s", "dH + Hd = FG - Id", "GF = Id", "G H = 0", "H F = 0", "H H = 0",
             "(Id x H) F = 0", "(Id x H) H = 0"]
    for A in fixtures.all_fixtures():
        comp, rep = verify_contraction(A, 5)
        for name in names:
            st = rep["identities"].get(name, {}).get("status")
            check(st == "pass", "%s: %s" % (A.name, name))
        check(all(v["status"] == "pass" for v in rep["identities"].values()),
              "%s: full identity report" % A.name)
        for p in A.radical_basis:
            check(comp.H_chain((p,)) == h1_closed_form(A, p), "%s: H_1 closed form" % A.name)
        for b, p in enum_bar_basis(A, 2):
            if len(b) == 1:
                want = {(A.e(b.source), (b,) + m, r): -c for (_, m, r), c in h1_closed_form(A, p).items()}
                check(comp.H_chain((b, p)) == want, "%s: H_2 closed form" % A.name)
        for n in range(1, 6):
            for mid in enum_bar_basis(A, n):
                if all(len(v) == 1 for v in mid):
                    check(comp.H_chain(mid) == {}, "%s: H_%d on arrows" % (A.name, n))


def criterion_8(check):
    for A in fixtures.all_fixtures():
        for n in range(2, 7):
            for c in compute_AP(A, n):
                check(resolution_d(A, delta_chain(A, c), n - 1) == {},
                      "%s delta delta on %s" % (A.name, c))
            for mid in enum_bar_basis(A, n):
                x = {(A.e(mid[0].source), mid, A.e(mid[-1].target)): 1}
                check(bar_d(A, bar_d(A, x)) == {}, "%s d d" % A.name)
        for n in range(3, 7):
            check({c.support for c in compute_AP(A, n)} == brute_force_AP(A, n),
                  "%s greedy = brute force in degree %d" % (A.name, n))
        for n in range(4):
            check(hh_dim(A, n) == hh_dim_bar(A, n), "%s HH^%d bar = Bardzell" % (A.name, n))
    for m in (3, 4):
        A = fixtures.loop_truncated(m)
        for n in range(2, 7):
            q, r = divmod(n, 2)
            check(all(len(c.support) == q * m + r for c in compute_AP(A, n)),
                  "TRUNC%d length pattern in degree %d" % (m, n))


def criterion_9(check, tuples=20):
    rng = random.Random(909)
    for A in fixtures.all_fixtures():
        comp, _ = verify_contraction(A, 4)
        for conv in (PLAIN, SHIFTED):
            E = bardzell_engine(A, conv, comparison=comp)
            K = E.K
            tag = "%s/%s" % (A.name, conv.name)
            for k in range(tuples):
                a = random_args(A, rng, 4)
                a3 = a[:3]
                sigma = tuple(rng.sample(range(1, 4), 3))
                check(K.b_is_zero(skew_defect(E, "l", a3, sigma)), "%s skew l" % tag)
                for w in ("u", "v", "phi"):
                    check(K.c_is_zero(skew_defect(E, w, a3, sigma)), "%s skew %s" % (tag, w))
                for n in (2, 3, 4):
                    check(K.b_is_zero(jacobi_residual(E, a[:n])), "%s Jacobi %d" % (tag, n))
                for n in (2, 3):
                    x = a[:n]
                    check(K.c_is_zero(weak_morphism_residual(E, x)), "%s weak %d" % (tag, n))
                    check((K.F(E.u(x)) + K.F(E.v(x))).is_zero(), "%s F*u = -F*v" % tag)
                    check(K.c_equal(E.phi(x), E.phi_from_v(x)), "%s phi = H*v" % tag)
                    check(K.c_is_zero(induction_residual(E, x)), "%s induction %d" % (tag, n))
                check(K.c_is_zero(phi_v_residual(E, a3)), "%s phi-v identity" % tag)


def rsz_candidate_series(A):
    if A.name == "RSZ2":
        f1, f2 = fixtures.rsz2_f(A)
        # f1 -> c f1, f2 -> c^2 f2 and t -> t^2 keep the series MC
        return [MCSeries({1: f1, 2: f2}), MCSeries({1: 2 * f1, 2: 4 * f2}),
                MCSeries({1: -f1, 2: f2}), MCSeries({2: f1, 4: f2}),
                MCSeries({1: f1 + f2}), MCSeries({1: f2}), MCSeries({1: f1}),
                MCSeries({1: f1 + f2, 2: f1})]
    f = fixtures.rsz1_f(A)
    return [MCSeries({1: f}), MCSeries({2: f})]


def criterion_10(check):
    for make in (fixtures.rsz1, fixtures.rsz2):
        A = make()
        E = bardzell_engine(A, SHIFTED)
        accepted = 0
        for s in rsz_candidate_series(A):
            if mc_check_series(A, s, 4, engine=E)["status"] != "pass":
                continue
            accepted += 1
            rep = pushforward_mc(A, s, 4, engine=E)
            check(rep["status"] == "pass", "%s pushforward is MC on the cochain side" % A.name)
            if rep["status"] == "pass":
                ok, where = associativity_oracle(A, rep["series"], 4)
                check(ok, "%s deformed product associative mod t^5" % A.name)
        if A.name == "RSZ2":
            check(accepted == 4, "RSZ2 accepts exactly the four MC series")
    A = fixtures.rsz1()
    f = fixtures.rsz1_f(A)
    s = MCSeries({1: f})
    check(mc_check_series(A, s, 4)["status"] == "fail", "RSZ1 cocycle rejected")
    m = pushforward_series(A, s, 4, "exponential")
    ok, where = associativity_oracle(A, m, 4)
    check(not ok, "RSZ1 cocycle gives a non-associative product")


CRITERIA = [
    (1, criterion_1, 300), (2, criterion_2, 120), (3, criterion_3, 60), (4, criterion_4, 60),
    (5, criterion_5, 60), (6, criterion_6, 120), (7, criterion_7, 180), (8, criterion_8, 180),
    (9, criterion_9, 300), (10, criterion_10, 60),
]


def run_criterion(fn, budget):
    check = Checks()
    t0 = time.perf_counter()
    error = None
    try:
        fn(check)
    except Exception as e:  # reported as a failure line
        error = "%s: %s" % (type(e).__name__, e)
    dt = time.perf_counter() - t0
    ok = error is None and not check.failed and check.count > 0 and dt <= budget
    return ok, dt, check, error


def report_line(num, ok, dt, budget, check, error):
    line = "criterion %d: %s (%.1fs, budget %ds, %d checks)" % (
        num, "PASS" if ok else "FAIL", dt, budget, check.count)
    if error:
        line += " error: " + error
    elif check.failed:
        line += " failed: " + "; ".join(check.failed[:3])
    elif dt > budget:
        line += " over budget"
    return line


@pytest.mark.parametrize("num,fn,budget", CRITERIA, ids=["criterion_%d" % c[0] for c in CRITERIA])
def test_criterion(num, fn, budget, capsys):
    ok, dt, check, error = run_criterion(fn, budget)
    with capsys.disabled():
        print("\n" + report_line(num, ok, dt, budget, check, error))
    assert ok, report_line(num, ok, dt, budget, check, error)


if __name__ == "__main__":
    results = []
    for num, fn, budget in CRITERIA:
        res = run_criterion(fn, budget)
        results.append(res[0])
        print(report_line(num, res[0], res[1], budget, res[2], res[3]), flush=True)
    sys.exit(0 if all(results) else 1)
