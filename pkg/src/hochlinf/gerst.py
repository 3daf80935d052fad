"""
Gerstenhaber circle products and bracket on normalized Hochschild cochains.

Cochains are evaluated lazily: the results here are ``Cochain`` objects whose
``value(mid)`` is computed (and memoized) on demand.  Substituting ``g`` into
a normalized ``f`` drops the trivial-path part of ``g``'s value, since ``f``
vanishes as soon as an argument is an idempotent.  The multiplication ``mu``
is not normalized and sees the full value.
"""

from fractions import Fraction

from .pathalg import add_term, Path
from .barcx import (Cochain, BarCochain, mu_cochain, hochschild_d, mid_degree,
                    enum_bar_basis)
from .bardzell import bardzell_basis, complex_differential, BardzellCochain
from .exactcore import SparseMatrix, rank

__all__ = ["circ_i", "gerst_product", "bracket", "mu_cochain", "lincomb", "hh_dim",
           "hh_dim_bar", "LazyCochain", "shifted_degree", "differential_via_bracket"]


def shifted_degree(f):
    return f.degree - 1


class LazyCochain(Cochain):
    """A cochain given by a function ``mid -> element``, memoized."""

    def __init__(self, degree, fn, label=None):
        self.degree = degree
        self._fn = fn
        self._cache = {}
        self.label = label

    def value(self, mid):
        got = self._cache.get(mid)
        if got is None:
            got = self._fn(mid)
            self._cache[mid] = got
        return got

    def __repr__(self):
        return "LazyCochain(%d, %s)" % (self.degree, self.label or "?")


def _split(mid):
    """Arguments and base vertex of a cochain key."""
    if mid_degree(mid) == 0:
        return (), mid[0].source
    return mid, mid[0].source


def _circ_value(A, f, g, i, mid):
    m = g.degree
    args, base = _split(mid)
    if m == 0:
        if i > 0:
            v = args[i - 1].target
        elif args:
            v = args[0].source
        else:
            v = base
        gval = g.value((Path(v, v, ()),))
    else:
        gval = g.value(args[i:i + m])
    out = {}
    for p, c in gval.items():
        if not p.arrows and not f.unital:
            continue
        for q, k in f.value(args[:i] + (p,) + args[i + m:]).items():
            add_term(out, q, c * k)
    return out


def circ_i(A, f, g, i):
    """``f o_i g``: ``g`` inserted in slot ``i`` (0-based) of ``f``."""
    n = f.degree
    if not 0 <= i <= n - 1:
        raise ValueError("slot %d out of range for a degree %d cochain" % (i, n))
    return LazyCochain(n + g.degree - 1, lambda mid: _circ_value(A, f, g, i, mid), "o_%d" % i)


def lincomb(pairs, degree=None):
    """Lazy linear combination of cochains of a common degree."""
    pairs = [(Fraction(c), f) for c, f in pairs if c]
    if degree is None:
        if not pairs:
            raise ValueError("empty combination needs an explicit degree")
        degree = pairs[0][1].degree
    for _, f in pairs:
        if f.degree != degree:
            raise ValueError("degree mismatch in linear combination")

    def fn(mid):
        out = {}
        for c, f in pairs:
            for p, k in f.value(mid).items():
                add_term(out, p, c * k)
        return out
    return LazyCochain(degree, fn, "lincomb")


def gerst_product(A, f, g):
    """``f o g = sum_i (-1)^{i(m+1)} f o_i g``."""
    n, m = f.degree, g.degree
    terms = [(-1 if (i * (m + 1)) % 2 else 1, circ_i(A, f, g, i)) for i in range(n)]
    return lincomb(terms, degree=n + m - 1)


def bracket(A, f, g):
    """``[f, g] = f o g - (-1)^{(n-1)(m-1)} g o f``."""
    n, m = f.degree, g.degree
    sign = -1 if ((n - 1) * (m - 1)) % 2 == 0 else 1
    return lincomb([(1, gerst_product(A, f, g)), (sign, gerst_product(A, g, f))],
                   degree=n + m - 1)


def differential_via_bracket(A, f):
    """``-[mu, f]``, which equals ``hochschild_d``."""
    return lincomb([(-1, bracket(A, mu_cochain(A), f))], degree=f.degree + 1)


# -- cohomology ----------------------------------------------------------------

def _matrix(A, src, dst, apply):
    index = {b: j for j, b in enumerate(dst)}
    M = SparseMatrix(len(dst), len(src))
    for j, b in enumerate(src):
        for key, c in apply(b).items():
            M[index[key], j] = c
    return M


def _bardzell_rank(A, n):
    if n < 0:
        return 0
    src = bardzell_basis(A, n)
    dst = bardzell_basis(A, n + 1)
    if not src or not dst:
        return 0

    def apply(b):
        w, g = b
        d = complex_differential(A, BardzellCochain(n, {w: {g: 1}}))
        return {(w2, g2): c for c, w2, g2 in d.terms()}
    return rank(_matrix(A, src, dst, apply))


def hh_dim(A, n):
    """``dim HH^n(A)`` from Bardzell's complex."""
    if n < 0:
        raise ValueError("negative degree")
    dim = len(bardzell_basis(A, n))
    return dim - _bardzell_rank(A, n) - _bardzell_rank(A, n - 1)


def _bar_basis(A, n):
    return [(mid, p) for mid in enum_bar_basis(A, n)
            for p in A.parallel_paths(Path(mid[0].source, mid[-1].target, ()))]


def _bar_rank(A, n):
    if n < 0:
        return 0
    src = _bar_basis(A, n)
    dst = _bar_basis(A, n + 1)
    if not src or not dst:
        return 0

    def apply(b):
        mid, p = b
        d = hochschild_d(A, BarCochain(n, {mid: {p: 1}}))
        return {(m2, q): c for m2, v in d.values.items() for q, c in v.items()}
    return rank(_matrix(A, src, dst, apply))


def hh_dim_bar(A, n):
    """``dim HH^n(A)`` from the normalized E-relative bar complex (small n only)."""
    if n < 0:
        raise ValueError("negative degree")
    return len(_bar_basis(A, n)) - _bar_rank(A, n) - _bar_rank(A, n - 1)
