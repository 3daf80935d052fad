"""
Maurer-Cartan equations in ``B*(A)[1]`` and in the normalized cochains.

On the Bardzell side the equation for ``f`` of shifted degree 1 is

    l_1 f - sum_{n >= 2} (-1)^{n(n+1)/2} / n!  l_n(f, ..., f) = 0

with ``l_1 = -delta^2``; this is the ``SHIFTED`` reading of the transferred
structure.  Over ``k[[t]]`` with ``f = sum_i f_i t^i`` it splits into one
finite equation per order.  On the cochain side MC for ``m`` means that
``mu + m`` is associative, which ``associativity_oracle`` checks directly.
"""

from fractions import Fraction
from math import factorial

from .pathalg import add_term, AlgebraError
from .barcx import BarCochain, mu_cochain
from .bardzell import BardzellCochain, bardzell_lincomb, compute_AP
from .compare import eval_bardzell_on
from .gerst import bracket, lincomb
from .transfer import bardzell_engine, SHIFTED


def mc_coefficient(n):
    """Coefficient of ``l_n(f^n)`` in the MC equation (``+1`` for ``n = 1``)."""
    s = -1 if (n * (n + 1) // 2) % 2 else 1
    return Fraction(-s, factorial(n))


def _engine(A, engine):
    if engine is None:
        return bardzell_engine(A, SHIFTED)
    if engine.K.conv is not SHIFTED:
        raise ValueError("MC equations are written for the shifted sign convention")
    return engine


def _zero(degree):
    return BardzellCochain(degree, {})


def _combine(terms, degree):
    terms = [(c, f) for c, f in terms if c and not f.is_zero()]
    return bardzell_lincomb(terms) if terms else _zero(degree)


def mc_residual(A, f, max_arity, engine=None):
    """Partial MC sum up to ``max_arity``.

    Returns ``(residual, tail_vanishes)``; the flag says whether
    ``l_n(f^n) = 0`` at the last two arities, a hint and not a proof.
    """
    if max_arity < 2:
        raise ValueError("max_arity must be >= 2")
    if f.degree != 2:
        raise ValueError("MC elements live in B^2")
    E = _engine(A, engine)
    terms = [(1, E.l([f]))]
    tail = []
    for n in range(2, max_arity + 1):
        ln = E.l([f] * n)
        terms.append((mc_coefficient(n), ln))
        tail.append(ln.is_zero())
    return _combine(terms, 3), all(tail[-2:])


def compositions(i, n, parts):
    """Ordered ``(j_1..j_n)`` with sum ``i`` and every ``j`` in ``parts``."""
    if n == 0:
        if i == 0:
            yield ()
        return
    for j in parts:
        if j <= i - (n - 1):
            for rest in compositions(i - j, n - 1, parts):
                yield (j,) + rest


class MCSeries:
    """``f = sum_{i=1}^N f_i t^i`` with every ``f_i`` in ``B^2``."""

    def __init__(self, coefficients, order=None):
        self.coefficients = {}
        for i, f in coefficients.items():
            i = int(i)
            if i < 1:
                raise ValueError("series coefficients start at order 1")
            if f.degree != 2:
                raise ValueError("coefficient of t^%d is not in B^2" % i)
            if not f.is_zero():
                self.coefficients[i] = f
        self.order = order if order is not None else max(self.coefficients, default=1)
        if self.order < 1:
            raise ValueError("truncation order must be >= 1")

    def __getitem__(self, i):
        return self.coefficients.get(i, _zero(2))


def mc_series_residual(A, series, i, engine=None):
    """The order-``i`` MC equation (``n <= i``, a finite sum)."""
    E = _engine(A, engine)
    parts = sorted(series.coefficients)
    terms = [(1, E.l([series[i]]))]
    for n in range(2, i + 1):
        c = mc_coefficient(n)
        for js in compositions(i, n, parts):
            terms.append((c, E.l([series[j] for j in js])))
    return _combine(terms, 3)


def mc_check_series(A, series, order=None, engine=None):
    N = order if order is not None else series.order
    E = _engine(A, engine)
    residuals = {i: mc_series_residual(A, series, i, E) for i in range(1, N + 1)}
    return {"order": N, "residuals": residuals,
            "status": "pass" if all(r.is_zero() for r in residuals.values()) else "fail"}


# -- radical square zero ------------------------------------------------------------

def mc_residual_dgla(A, f, engine=None):
    """``-delta^2 f + 1/2 l_2(f, f)`` for radical square zero ``A``.

    Also returns the coordinate evaluation per AP_3 element, computed
    directly from ``f`` and ``G_2``.
    """
    if not A.is_radical_square_zero():
        raise AlgebraError("the dg-Lie MC form needs a radical square zero algebra")
    E = _engine(A, engine)
    res = _combine([(1, E.K.dB(f)), (Fraction(1, 2), E.l([f, f]))], 3)
    return res, mc_coordinates(A, f, E.K.comp)


def mc_coordinates(A, f, comp):
    """``f(a1 a2) a3 - a1 f(a2 a3) + f G_2(f(a1 a2) (x) a3 - a1 (x) f(a2 a3))``."""
    q = A.quiver
    out = {}
    for w in compute_AP(A, 3):
        a12 = w.support.sub(0, 2, q)
        a23 = w.support.sub(1, 3, q)
        a1 = w.support.sub(0, 1, q)
        a3 = w.support.sub(2, 3, q)
        val = {}
        for p, c in f.value(a12).items():
            r = A.path_product(p, a3)
            if r is not None:
                add_term(val, r, c)
        for p, c in f.value(a23).items():
            r = A.path_product(a1, p)
            if r is not None:
                add_term(val, r, -c)
        chain = {}
        for p, c in f.value(a12).items():
            if p.arrows:
                add_term(chain, (A.e(p.source), (p, a3), A.e(a3.target)), c)
        for p, c in f.value(a23).items():
            if p.arrows:
                add_term(chain, (A.e(a1.source), (a1, p), A.e(p.target)), -c)
        for key, c in eval_bardzell_on(A, f, comp.G_apply(chain)).items():
            add_term(val, key, c)
        if val:
            out[w.support] = val
    return BardzellCochain(3, out)


# -- pushforward to the cochain side -------------------------------------------------

COEFFICIENT_FAMILIES = {
    "signed": lambda n: Fraction(-1 if (n * (n + 1) // 2) % 2 else 1, factorial(n)),
    "exponential": lambda n: Fraction(1, factorial(n)),
}


def pushforward_series(A, series, order, family, engine=None):
    """``m_i = sum_n c_n sum_{j_1+..+j_n=i} phi_n(f_j1, .., f_jn)``, lazily."""
    E = _engine(A, engine)
    c = COEFFICIENT_FAMILIES[family]
    parts = sorted(series.coefficients)
    m = {}
    for i in range(1, order + 1):
        terms = []
        for n in range(1, i + 1):
            for js in compositions(i, n, parts):
                terms.append((c(n), E.phi([series[j] for j in js])))
        m[i] = lincomb(terms, degree=2) if terms else BarCochain(2, {})
    return m


def dgla_mc_residuals(A, m, order):
    """Order-``i`` parts of ``[mu, m] + 1/2 [m, m]`` (zero iff ``mu + m`` associative)."""
    mu = mu_cochain(A)
    out = {}
    for i in range(1, order + 1):
        terms = [(1, bracket(A, mu, m[i]))] if i in m else []
        for j in range(1, i):
            if j in m and i - j in m:
                terms.append((Fraction(1, 2), bracket(A, m[j], m[i - j])))
        out[i] = lincomb(terms, degree=3).materialize(A) if terms else BarCochain(3, {})
    return out


def pushforward_mc(A, series, order=None, engine=None, families=("signed", "exponential")):
    """Push an MC series forward along ``phi`` and verify it on the cochain side."""
    N = order if order is not None else series.order
    E = _engine(A, engine)
    tried = {}
    for fam in families:
        m = pushforward_series(A, series, N, fam, E)
        res = dgla_mc_residuals(A, m, N)
        ok = all(r.is_zero() for r in res.values())
        tried[fam] = "pass" if ok else "fail"
        if ok:
            return {"status": "pass", "family": fam, "series": m, "residuals": res,
                    "tried": tried}
    return {"status": "fail", "family": None, "tried": tried}


# -- associativity oracle ------------------------------------------------------------

def _eval2(A, M, p, q):
    """Value of the order-``k`` product on two basis paths (``M`` is mu or an m_i)."""
    if M is None:
        r = A.path_product(p, q)
        return {r: Fraction(1)} if r is not None else {}
    if not p.arrows or not q.arrows:
        return {}
    if p.target != q.source:
        return {}
    return M.value((p, q))


def _apply2(A, M, x, y):
    out = {}
    for p, a in x.items():
        for q, b in y.items():
            for r, c in _eval2(A, M, p, q).items():
                add_term(out, r, a * b * c)
    return out


def associativity_oracle(A, m, N):
    """Whether ``mu + sum m_i t^i`` is associative modulo ``t^{N+1}``.

    Returns ``(ok, first_failure)`` with ``first_failure = (order, x, y, z)``.
    """
    if 0 in m:
        raise ValueError("the deformation must not have an order-0 term")
    layers = {0: None}
    layers.update({i: f for i, f in m.items() if 1 <= i <= N})
    basis = A.basis
    for k in range(1, N + 1):
        for x in basis:
            for y in basis:
                if x.target != y.source:
                    continue
                for z in basis:
                    if y.target != z.source:
                        continue
                    total = {}
                    for i in layers:
                        j = k - i
                        if j not in layers:
                            continue
                        Mi, Mj = layers[i], layers[j]
                        right = _apply2(A, Mi, {x: Fraction(1)}, _eval2(A, Mj, y, z))
                        left = _apply2(A, Mi, _eval2(A, Mj, x, y), {z: Fraction(1)})
                        for r, c in right.items():
                            add_term(total, r, c)
                        for r, c in left.items():
                            add_term(total, r, -c)
                    if total:
                        return False, (k, x, y, z)
    return True, None
