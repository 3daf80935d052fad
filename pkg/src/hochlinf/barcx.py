"""
The E-relative bar resolution ``A (x)_E rad(A)^{(x)_E n} (x)_E A`` and the
Hochschild cochains on it.

Chains are dicts ``(a, mid, b) -> Fraction`` where ``a``, ``b`` are basis
paths and ``mid`` is a tuple of radical basis paths (``()`` in degree 0).

A cochain of degree ``n`` is determined by its values on the middle tuples
``(v_1, ..., v_n)``; in degree 0 the "tuple" is ``(e_v,)`` for a vertex ``v``.
"""

from fractions import Fraction

from .pathalg import Path, add_term, add_into, format_element

DEFAULT_BASIS_CAP = 200_000


class BasisTooLarge(RuntimeError):
    pass


def mid_degree(mid):
    return 0 if (len(mid) == 1 and not mid[0].arrows) else len(mid)


def mid_source(mid):
    return mid[0].source


def mid_target(mid):
    return mid[-1].target


def mid_key(mid, vertex):
    """Cochain key for a chain middle; degree 0 needs the vertex."""
    if mid:
        return mid
    return (Path(vertex, vertex, ()),)


# -- chains ------------------------------------------------------------------

def basis_tensor(A, mid, a=None, b=None):
    """``a (x) v_1 (x) ... (x) v_n (x) b`` with ``a``, ``b`` defaulting to units."""
    mid = tuple(A.path(v) for v in mid)
    if a is None:
        a = A.e(mid[0].source)
    if b is None:
        b = A.e(mid[-1].target)
    return {(a, mid, b): Fraction(1)}


def chain_degree(x):
    for (_, mid, _) in x:
        return len(mid)
    return None


def left_mult(A, p, x):
    """``p . x`` for a basis path ``p``."""
    out = {}
    for (a, mid, b), c in x.items():
        pa = A.path_product(p, a)
        if pa is not None:
            add_term(out, (pa, mid, b), c)
    return out


def right_mult(A, x, p):
    out = {}
    for (a, mid, b), c in x.items():
        bp = A.path_product(b, p)
        if bp is not None:
            add_term(out, (a, mid, bp), c)
    return out


def bimod_mult(A, p, x, q):
    out = {}
    for (a, mid, b), c in x.items():
        pa = A.path_product(p, a)
        if pa is None:
            continue
        bq = A.path_product(b, q)
        if bq is not None:
            add_term(out, (pa, mid, bq), c)
    return out


def bar_d(A, x):
    out = {}
    for (a, mid, b), c in x.items():
        n = len(mid)
        if n == 0:
            raise ValueError("bar_d is not defined on degree 0 chains")
        av = A.path_product(a, mid[0])
        if av is not None:
            add_term(out, (av, mid[1:], b), c)
        for i in range(n - 1):
            prod = A.path_product(mid[i], mid[i + 1])
            if prod is not None:
                nm = mid[:i] + (prod,) + mid[i + 2:]
                add_term(out, (a, nm, b), -c if i % 2 == 0 else c)
        vb = A.path_product(mid[-1], b)
        if vb is not None:
            add_term(out, (a, mid[:-1], vb), c if n % 2 == 0 else -c)
    return out


def bar_s(A, x):
    """The contracting homotopy ``a (x) y -> 1 (x) a_r (x) y`` (right A-linear)."""
    out = {}
    for (a, mid, b), c in x.items():
        if a.arrows:
            add_term(out, (A.e(a.source), (a,) + mid, b), c)
    return out


def enum_bar_basis(A, n, cap=DEFAULT_BASIS_CAP):
    """All composable tuples of radical basis paths of length ``n``."""
    if n < 0:
        raise ValueError("negative degree")
    if n == 0:
        return [(A.e(v),) for v in A.vertices]
    cache = A.__dict__.setdefault("_bar_basis_cache", {})
    if n in cache:
        return cache[n]
    prev = enum_bar_basis(A, n - 1, cap) if n > 1 else [(p,) for p in A.radical_basis]
    if n == 1:
        out = prev
    else:
        out = []
        for t in prev:
            for p in A.radical_paths_from(t[-1].target):
                out.append(t + (p,))
                if len(out) > cap:
                    raise BasisTooLarge("basis too large: more than %d tuples in degree %d" % (cap, n))
    cache[n] = out
    return out


# -- cochains ----------------------------------------------------------------

class Cochain:
    """Anything with a degree and ``value(mid) -> algebra element``."""

    degree = None
    unital = False

    def value(self, mid):
        raise NotImplementedError

    def evaluate_chain(self, A, x):
        """``f^`` applied to a chain: ``sum c a f(mid) b``."""
        out = {}
        for (a, mid, b), c in x.items():
            val = self.value(mid_key(mid, a.target))
            for p, k in val.items():
                r = A.path_product(a, p)
                if r is None:
                    continue
                r = A.path_product(r, b)
                if r is not None:
                    add_term(out, r, c * k)
        return out

    def materialize(self, A):
        vals = {}
        for mid in enum_bar_basis(A, self.degree):
            v = self.value(mid)
            if v:
                vals[mid] = dict(v)
        return BarCochain(self.degree, vals)


class BarCochain(Cochain):
    """A materialized cochain: a finite dict ``mid -> element``."""

    def __init__(self, degree, values=None):
        self.degree = degree
        self.values = {}
        for mid, v in (values or {}).items():
            mid = tuple(mid)
            if mid_degree(mid) != degree:
                raise ValueError("tuple of degree %d in a degree %d cochain" % (mid_degree(mid), degree))
            v = {p: Fraction(c) for p, c in v.items() if c}
            if v:
                self.values[mid] = v
        self._key = None

    def value(self, mid):
        return self.values.get(mid, {})

    def key(self):
        if self._key is None:
            self._key = (self.degree, frozenset(
                (mid, frozenset(v.items())) for mid, v in self.values.items()))
        return self._key

    def __eq__(self, other):
        if not isinstance(other, BarCochain):
            return NotImplemented
        return self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def is_zero(self):
        return not self.values

    def __add__(self, other):
        return cochain_lincomb([(1, self), (1, other)])

    def __sub__(self, other):
        return cochain_lincomb([(1, self), (-1, other)])

    def __neg__(self):
        return cochain_lincomb([(-1, self)])

    def __rmul__(self, c):
        return cochain_lincomb([(c, self)])

    def materialize(self, A=None):
        return self

    def __repr__(self):
        if not self.values:
            return "BarCochain(%d, 0)" % self.degree
        items = sorted(self.values.items(), key=lambda kv: [str(p) for p in kv[0]])
        body = "; ".join("(%s) -> %s" % (", ".join(str(p) for p in m), format_element(v))
                         for m, v in items[:6])
        if len(items) > 6:
            body += "; ..."
        return "BarCochain(%d, %s)" % (self.degree, body)


def cochain_lincomb(pairs):
    pairs = [(Fraction(c), f) for c, f in pairs]
    deg = pairs[0][1].degree
    vals = {}
    for c, f in pairs:
        if f.degree != deg:
            raise ValueError("degree mismatch in linear combination")
        for mid, v in f.values.items():
            add_into(vals.setdefault(mid, {}), v, c)
    return BarCochain(deg, {m: v for m, v in vals.items() if v})


class MultiplicationCochain(Cochain):
    """The multiplication ``mu`` of A as a degree 2 cochain.

    Unlike the normalized cochains, ``mu`` does not vanish on idempotents;
    substituting into it uses the full product.
    """

    degree = 2
    unital = True

    def __init__(self, A):
        self.A = A

    def value(self, mid):
        p = self.A.path_product(mid[0], mid[1])
        return {p: Fraction(1)} if p is not None else {}


def mu_cochain(A):
    return MultiplicationCochain(A)


def hochschild_d(A, f):
    """``(d f)(v_0..v_n) = (-1)^n f^ d_{n+1}(1 (x) v_0 .. v_n (x) 1)``."""
    n = f.degree
    sign = -1 if n % 2 else 1
    vals = {}
    for mid in enum_bar_basis(A, n + 1):
        x = {(A.e(mid[0].source), mid, A.e(mid[-1].target)): Fraction(1)}
        v = f.evaluate_chain(A, bar_d(A, x))
        if v:
            vals[mid] = {p: sign * c for p, c in v.items()}
    return BarCochain(n + 1, vals)


def random_bar_cochain(A, n, rng, density=0.3, coeffs=(-2, -1, 1, 2, 3)):
    """A random normalized cochain: random parallel values on random tuples."""
    vals = {}
    for mid in enum_bar_basis(A, n):
        if rng.random() >= density:
            continue
        par = A.parallel_paths(Path(mid[0].source, mid[-1].target, ()))
        if not par:
            continue
        v = {}
        for p in par:
            if rng.random() < 0.5:
                add_term(v, p, Fraction(rng.choice(coeffs)))
        if v:
            vals[mid] = v
    return BarCochain(n, vals)
