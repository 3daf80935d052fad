"""
Bardzell's complex for a monomial algebra.

``AP_0`` are the vertices, ``AP_1`` the arrows, ``AP_2`` the relations; an
element of ``AP_n`` (n >= 3) is a path covered by the greedy-leftmost chain of
relation occurrences ``p_1, ..., p_{n-1}``: ``p_1`` starts at 0 and
``p_{i+1}`` is the occurrence of minimal start ``s`` with
``e_{i-1} <= s <= e_i`` and end ``> e_i``; the last one must end flush.

A chain is identified by its support path.  Projective generators of the
resolution are written ``(L, w, R)`` meaning ``L (x) w (x) R``.
"""

from collections import namedtuple
from fractions import Fraction

from .pathalg import Path, add_term, add_into


class APChain(namedtuple("APChain", "degree support occurrences")):
    """``occurrences`` is a tuple of ``(start, end)`` offsets of the relations."""
    __slots__ = ()

    def relations(self, quiver):
        return [self.support.sub(s, e, quiver) for s, e in self.occurrences]

    def __str__(self):
        return str(self.support)


def relation_occurrences(A, arrows):
    """All ``(start, end)`` with ``arrows[start:end]`` a relation."""
    occ = []
    n = len(arrows)
    for s in range(n):
        for k in A.relation_lengths:
            if s + k <= n and arrows[s:s + k] in A.relation_words:
                occ.append((s, s + k))
    return occ


def greedy_cover(A, arrows):
    """The greedy-leftmost chain of relation occurrences of a word, or []."""
    n = len(arrows)
    first = None
    for k in A.relation_lengths:
        if k <= n and arrows[:k] in A.relation_words:
            first = (0, k)
            break
    if first is None:
        return []
    occ = [first]
    allocc = relation_occurrences(A, arrows)
    prev_end = 0
    while True:
        cur_end = occ[-1][1]
        best = None
        for s, e in allocc:
            if prev_end <= s <= cur_end and e > cur_end:
                if best is None or s < best[0]:
                    best = (s, e)
        if best is None:
            return occ
        occ.append(best)
        prev_end = cur_end


def ap_chain_of(A, support):
    """The AP chain with this support, or None."""
    support = A.path(support) if not isinstance(support, Path) else support
    if not support.arrows:
        return APChain(0, support, ())
    if len(support) == 1:
        return APChain(1, support, ())
    occ = greedy_cover(A, support.arrows)
    if not occ or occ[-1][1] != len(support):
        return None
    return APChain(len(occ) + 1, support, tuple(occ))


def compute_AP(A, n):
    """``AP_n`` as a list of APChain, in deterministic order (cached)."""
    if n < 0:
        raise ValueError("negative degree")
    cache = A.__dict__.setdefault("_ap_cache", {})
    if n in cache:
        return cache[n]
    q = A.quiver
    if n == 0:
        out = [APChain(0, A.e(v), ()) for v in A.vertices]
    elif n == 1:
        out = [APChain(1, q.path([a]), ()) for a in q.arrows]
    elif n == 2:
        out = [APChain(2, r, ((0, len(r)),)) for r in A.relations]
    else:
        seen = set()
        out = []
        for u in compute_AP(A, n - 1):
            occ = u.occurrences
            cur_end = occ[-1][1]
            prev_end = occ[-2][1] if len(occ) >= 2 else 0
            w = u.support.arrows
            for r in A.relations:
                k = len(r)
                for s in range(prev_end, cur_end + 1):
                    if s + k <= cur_end:
                        continue
                    if r.arrows[:cur_end - s] != w[s:cur_end]:
                        continue
                    ext = r.arrows[cur_end - s:]
                    if q.arrows[w[-1]].target != q.arrows[ext[0]].source:
                        continue
                    cand = w + ext
                    if cand in seen:
                        continue
                    seen.add(cand)
                    c = ap_chain_of(A, Path(u.support.source, r.target, cand))
                    if c is not None and c.degree == n:
                        out.append(c)
        out.sort(key=lambda c: (c.support.arrows, c.support.source))
    cache[n] = out
    return out


def ap_supports(A, n):
    cache = A.__dict__.setdefault("_ap_support_cache", {})
    if n not in cache:
        cache[n] = {c.support: c for c in compute_AP(A, n)}
    return cache[n]


def brute_force_AP(A, n, max_length=None):
    """Independent enumeration of ``AP_n`` supports (n >= 3) over all covers.

    Searches every path up to ``max_length`` and every chain of relation
    occurrences ``p_1..p_{n-1}`` with ``s_1 = 0``, ``e_{n-1} = length``,
    ``e_{i-1} <= s_{i+1} <= e_i < e_{i+1}`` such that no other occurrence
    inside the window ends strictly before the chosen one.
    """
    if n < 3:
        raise ValueError("brute force search only for n >= 3")
    q = A.quiver
    if max_length is None:
        max_length = (n - 1) * A.max_relation_length
    found = set()
    layer = [q.path([a]) for a in q.arrows]
    words = list(layer)
    for _ in range(max_length - 1):
        layer = [Path(p.source, a.target, p.arrows + (a.name,))
                 for p in layer for a in q.out_arrows[p.target]]
        words.extend(layer)
    for w in words:
        occ = relation_occurrences(A, w.arrows)
        L = len(w)

        def search(chain):
            if len(chain) == n - 1:
                return chain[-1][1] == L
            cur_end = chain[-1][1]
            prev_end = chain[-2][1] if len(chain) >= 2 else 0
            window = [(s, e) for s, e in occ if prev_end <= s <= cur_end and e > cur_end]
            for s, e in window:
                if any(e2 < e for _, e2 in window):
                    continue
                if search(chain + [(s, e)]):
                    return True
            return False

        if any(s == 0 for s, _ in occ):
            start = [(s, e) for s, e in occ if s == 0]
            if search(start[:1]):
                found.add(w)
    return found


# -- the resolution ----------------------------------------------------------

def sub_chains(A, w):
    """All ``(L, psi, R)`` with ``psi`` in ``AP_{n-1}`` dividing ``w``."""
    n = w.degree
    if n < 1:
        raise ValueError("Sub is only defined in degree >= 1")
    q = A.quiver
    sup = w.support
    L = len(sup)
    out = []
    if n == 1:
        return [(A.e(sup.source), APChain(0, A.e(sup.source), ()), sup),
                (sup, APChain(0, A.e(sup.target), ()), A.e(sup.target))]
    lower = ap_supports(A, n - 1)
    lens = sorted({len(c.support) for c in lower.values()})
    for s in range(L):
        for k in lens:
            if s + k > L:
                continue
            p = sup.sub(s, s + k, q)
            psi = lower.get(p)
            if psi is not None:
                out.append((sup.sub(0, s, q), psi, sup.sub(s + k, L, q)))
    return out


def delta_chain(A, w):
    """``delta_n(1 (x) w (x) 1)`` as a dict ``(L, psi_support, R) -> coeff``.

    Even degree: every divisor with sign +1.  Odd degree: the prefix divisor
    with -1 and the suffix divisor with +1.
    """
    cache = A.__dict__.setdefault("_delta_cache", {})
    if w in cache:
        return cache[w]
    out = {}
    n = w.degree
    for L, psi, R in sub_chains(A, w):
        if n % 2 == 0:
            sign = 1
        elif not L.arrows:
            sign = -1
        elif not R.arrows:
            sign = 1
        else:
            raise AssertionError("odd degree chain %s with an interior divisor" % (w,))
        Lz = A.is_nonzero(L)
        Rz = A.is_nonzero(R)
        if Lz and Rz:
            add_term(out, (L, psi.support, R), Fraction(sign))
    cache[w] = out
    return out


def resolution_d(A, x, degree):
    """``delta`` on a combination ``(L, w_support, R) -> c`` of degree ``degree``."""
    out = {}
    sup = ap_supports(A, degree)
    for (L, ws, R), c in x.items():
        for (l2, ps, r2), k in delta_chain(A, sup[ws]).items():
            a = A.path_product(L, l2)
            if a is None:
                continue
            b = A.path_product(r2, R)
            if b is not None:
                add_term(out, (a, ps, b), c * k)
    return out


# -- cochains ----------------------------------------------------------------

class BardzellCochain:
    """A finite combination of basis maps ``(w || gamma)``.

    ``values`` maps support paths of ``AP_n`` to algebra elements parallel to them.
    """

    def __init__(self, degree, values=None, A=None):
        self.degree = degree
        self.values = {}
        for w, v in (values or {}).items():
            v = {p: Fraction(c) for p, c in v.items() if c}
            if A is not None:
                if w not in ap_supports(A, degree):
                    raise ValueError("%s is not in AP_%d" % (w, degree))
                for p in v:
                    if (p.source, p.target) != (w.source, w.target):
                        raise ValueError("%s is not parallel to %s" % (p, w))
            if v:
                self.values[w] = v
        self._key = None

    def value(self, w):
        return self.values.get(w, {})

    def key(self):
        if self._key is None:
            self._key = (self.degree, frozenset(
                (w, frozenset(v.items())) for w, v in self.values.items()))
        return self._key

    def __eq__(self, other):
        if not isinstance(other, BardzellCochain):
            return NotImplemented
        return self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def is_zero(self):
        return not self.values

    def __add__(self, other):
        return bardzell_lincomb([(1, self), (1, other)])

    def __sub__(self, other):
        return bardzell_lincomb([(1, self), (-1, other)])

    def __neg__(self):
        return bardzell_lincomb([(-1, self)])

    def __rmul__(self, c):
        return bardzell_lincomb([(c, self)])

    def terms(self):
        """Sorted ``(coeff, w, gamma)`` triples."""
        out = []
        for w in sorted(self.values, key=lambda p: (len(p), p.arrows, p.source)):
            v = self.values[w]
            for g in sorted(v, key=lambda p: (len(p), p.arrows, p.source)):
                out.append((v[g], w, g))
        return out

    def coefficient(self, w, gamma):
        return self.values.get(w, {}).get(gamma, Fraction(0))

    def __repr__(self):
        return "BardzellCochain(%d, %s)" % (self.degree, format_cochain(self))


def bardzell_lincomb(pairs):
    pairs = [(Fraction(c), f) for c, f in pairs]
    deg = pairs[0][1].degree
    vals = {}
    for c, f in pairs:
        if f.degree != deg:
            raise ValueError("degree mismatch in linear combination")
        for w, v in f.values.items():
            add_into(vals.setdefault(w, {}), v, c)
    return BardzellCochain(deg, {w: v for w, v in vals.items() if v})


def basis_map(A, w, gamma, coeff=1):
    """The cochain ``coeff * (w || gamma)``."""
    w = A.path(w)
    gamma = A.path(gamma)
    c = ap_chain_of(A, w)
    if c is None:
        raise ValueError("%s is not an AP chain" % (w,))
    return BardzellCochain(c.degree, {w: {gamma: coeff}}, A=A)


def bardzell_basis(A, n):
    """All ``(w, gamma)`` with ``w`` in ``AP_n`` and ``gamma`` a nonzero parallel path."""
    return [(c.support, g) for c in compute_AP(A, n) for g in A.parallel_paths(c.support)]


def delta_cochain(A, f):
    """Raw ``delta^n f = f^ delta_{n+1}``."""
    n = f.degree
    vals = {}
    for w in compute_AP(A, n + 1):
        out = {}
        for (L, ps, R), c in delta_chain(A, w).items():
            for p, k in f.value(ps).items():
                r = A.path_product(L, p)
                if r is None:
                    continue
                r = A.path_product(r, R)
                if r is not None:
                    add_term(out, r, c * k)
        if out:
            vals[w.support] = out
    return BardzellCochain(n + 1, vals)


def complex_differential(A, f):
    """The differential ``(-1)^n delta^n`` of the cochain complex ``B^*(A)``."""
    d = delta_cochain(A, f)
    return -d if f.degree % 2 else d


def random_bardzell_cochain(A, n, rng, density=0.5, coeffs=(-2, -1, 1, 2, 3)):
    vals = {}
    for c in compute_AP(A, n):
        if rng.random() >= density:
            continue
        v = {}
        for g in A.parallel_paths(c.support):
            if rng.random() < 0.6:
                add_term(v, g, Fraction(rng.choice(coeffs)))
        if v:
            vals[c.support] = v
    return BardzellCochain(n, vals)


def format_cochain(f):
    """``"c (w || g) + ..."`` with ``w`` and ``g`` as arrow-name lists."""
    terms = f.terms()
    if not terms:
        return "0"
    out = []
    for i, (c, w, g) in enumerate(terms):
        body = "(%s || %s)" % (w, g)
        mag = abs(c)
        t = body if mag == 1 else "%s %s" % (mag, body)
        if i == 0:
            out.append("-" + t if c < 0 else t)
        else:
            out.append(("- " if c < 0 else "+ ") + t)
    return " ".join(out)
