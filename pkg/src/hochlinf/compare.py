"""
Comparison morphisms between Bardzell's resolution and the E-relative bar
resolution together with the homotopy ``H`` (``dH + Hd = FG - Id``).
Duals on cochains follow at the end of the module.

``F_n(1 (x) w (x) 1) = s F_{n-1} delta_n (1 (x) w (x) 1)`` is the canonical
lift through the contracting homotopy ``s``.

``G_n(1 (x) v_1 (x) ... (x) v_n (x) 1)`` collects occurrences ``L w R`` of
``AP_n`` chains inside ``v_1 ... v_n`` starting inside ``v_1``, one term per
occurrence in odd degree and only the one of minimal start in even degree.
The default ``"paired"`` rule also makes G vanish unless the products
``v_{n-1} v_n``, ``v_{n-3} v_{n-2}``, ... all lie in I.  The ``"sum"`` and
``"minimal"`` rules instead ask the ``i``-th relation of ``w`` to start
inside ``v_i`` (keeping every occurrence, resp. the minimal one, in even
degree); they agree with ``"paired"`` on small examples but are not chain
maps in general.

``H_n(1 (x) x) = 1 (x) F_n G_n (1 (x) x) - 1 (x) v_1 (x) H_{n-1}(1 (x) x')``
where ``x = v_1 (x) x'``.
"""

import json
from fractions import Fraction

from .pathalg import Path, add_term, add_into
from .barcx import bar_d, bar_s, bimod_mult, enum_bar_basis, Cochain
from .bardzell import (compute_AP, ap_supports, delta_chain, resolution_d,
                       BardzellCochain)

VARIANTS = ("sum", "minimal", "paired")


class ContractionError(RuntimeError):
    pass


class Comparison:
    """F, G and H for one algebra, memoized per generator."""

    def __init__(self, A, variant="paired"):
        if variant not in VARIANTS:
            raise ValueError("unknown G variant %r" % variant)
        self.A = A
        self.variant = variant
        self._F = {}
        self._G = {}
        self._H = {}
        self._ap_words = {}

    # -- F -------------------------------------------------------------------

    def F_chain(self, w):
        """``F_n(1 (x) w (x) 1)`` for an APChain (or its support)."""
        A = self.A
        if not hasattr(w, "degree"):
            w = self._chain(w)
        got = self._F.get(w)
        if got is not None:
            return got
        n = w.degree
        if n == 0:
            v = w.support
            out = {(v, (), v): Fraction(1)}
        else:
            lower = ap_supports(A, n - 1)
            y = {}
            for (L, ps, R), c in delta_chain(A, w).items():
                add_into(y, bimod_mult(A, L, self.F_chain(lower[ps]), R), c)
            out = bar_s(A, y)
        self._F[w] = out
        return out

    def F_apply(self, x, degree):
        """F on a combination ``(L, w_support, R) -> c`` of the given degree."""
        A = self.A
        sup = ap_supports(A, degree)
        out = {}
        for (L, ws, R), c in x.items():
            add_into(out, bimod_mult(A, L, self.F_chain(sup[ws]), R), c)
        return out

    def _chain(self, support):
        for n, table in self._all_supports():
            if support in table:
                return table[support]
        raise KeyError(support)

    def _all_supports(self):
        n = 0
        while True:
            table = ap_supports(self.A, n)
            yield n, table
            n += 1
            if n > 64:
                return

    # -- G -------------------------------------------------------------------

    def _words(self, n):
        got = self._ap_words.get(n)
        if got is None:
            got = {}
            for c in compute_AP(self.A, n):
                got.setdefault(len(c.support), {})[c.support.arrows] = c
            self._ap_words[n] = got
        return got

    def G_chain(self, mid):
        """``G_n(1 (x) v_1 .. v_n (x) 1)`` as ``(L, w_support, R) -> c``."""
        got = self._G.get(mid)
        if got is not None:
            return got
        n = len(mid)
        if n == 0:
            raise ValueError("use G_apply for degree 0 chains")
        out = {}
        if self.variant == "paired":
            hits = self._paired_hits(mid)
        else:
            hits = self._cut_hits(mid)
        if n % 2 == 0 and self.variant != "sum" and hits:
            first = min(h[0] for h in hits)
            hits = [h for h in hits if h[0] == first]
        A = self.A
        q = A.quiver
        word = sum((v.arrows for v in mid), ())
        whole = Path(mid[0].source, mid[-1].target, word)
        for o, end in hits:
            L = whole.sub(0, o, q)
            R = whole.sub(end, len(word), q)
            if A.is_nonzero(L) and A.is_nonzero(R):
                add_term(out, (L, whole.sub(o, end, q), R), Fraction(1))
        self._G[mid] = out
        return out

    @staticmethod
    def _cuts(mid):
        word = ()
        cuts = [0]
        for v in mid:
            word += v.arrows
            cuts.append(len(word))
        return word, cuts

    def _cut_hits(self, mid):
        # occurrences whose i-th relation starts inside v_i
        n = len(mid)
        word, cuts = self._cuts(mid)
        total = len(word)
        if n == 1:
            return [(o, o + 1) for o in range(total)]
        hits = []
        for k, table in self._words(n).items():
            for o in range(0, min(cuts[1], total - k + 1)):
                c = table.get(word[o:o + k])
                if c is not None and all(cuts[i] <= o + s < cuts[i + 1]
                                         for i, (s, _) in enumerate(c.occurrences)):
                    hits.append((o, o + k))
        return hits

    def _paired_hits(self, mid):
        # zero unless v_{n-1} v_n, v_{n-3} v_{n-2}, ... all vanish in A;
        # otherwise every AP_n divisor starting inside v_1
        A = self.A
        n = len(mid)
        word, cuts = self._cuts(mid)
        total = len(word)
        if n == 1:
            return [(o, o + 1) for o in range(total)]
        for j in range(n - 1, 0, -2):
            if A.path_product(mid[j - 1], mid[j]) is not None:
                return []
        hits = []
        for k, table in self._words(n).items():
            for o in range(0, min(cuts[1], total - k + 1)):
                if word[o:o + k] in table:
                    hits.append((o, o + k))
        return hits

    def G_apply(self, x):
        """G on a bar chain ``(a, mid, b) -> c``."""
        A = self.A
        out = {}
        for (a, mid, b), c in x.items():
            if not mid:
                v = a.target
                add_term(out, (a, Path(v, v, ()), b), c)
                continue
            for (L, ws, R), k in self.G_chain(mid).items():
                aL = A.path_product(a, L)
                if aL is None:
                    continue
                Rb = A.path_product(R, b)
                if Rb is not None:
                    add_term(out, (aL, ws, Rb), c * k)
        return out

    def FG_chain(self, mid):
        return self.F_apply(self.G_apply(self._unit(mid)), len(mid))

    def _unit(self, mid):
        A = self.A
        if not mid:
            raise ValueError("empty middle")
        return {(A.e(mid[0].source), mid, A.e(mid[-1].target)): Fraction(1)}

    # -- H -------------------------------------------------------------------

    def H_chain(self, mid):
        """``H_n(1 (x) v (x) 1)``; always of the form ``1 (x) y``."""
        got = self._H.get(mid)
        if got is not None:
            return got
        A = self.A
        n = len(mid)
        out = bar_s(A, self.FG_chain(mid))
        if n >= 2:
            inner = self.H_chain(mid[1:])
            v1 = mid[0]
            for (a, m2, b), c in inner.items():
                # a is the unit at the source of mid[1]
                add_term(out, (A.e(v1.source), (v1,) + m2, b), -c)
        self._H[mid] = out
        return out

    def H_chain_recursive(self, mid):
        """The general recursion ``s F G - s H d`` (independent of the closed form)."""
        A = self.A
        x = self._unit(mid)
        out = bar_s(A, self.FG_chain(mid))
        if len(mid) >= 2:
            add_into(out, bar_s(A, self.H_apply(bar_d(A, x))), -1)
        return out

    def H_apply(self, x):
        A = self.A
        out = {}
        for (a, mid, b), c in x.items():
            if not mid:
                continue
            add_into(out, bimod_mult(A, a, self.H_chain(mid), b), c)
        return out

    # -- cochain duals -------------------------------------------------------

    def F_op(self, f):
        """``F^n(f) = f F_n``: a bar cochain to a Bardzell cochain."""
        A = self.A
        n = f.degree
        vals = {}
        for w in compute_AP(A, n):
            v = f.evaluate_chain(A, self.F_chain(w))
            if v:
                vals[w.support] = v
        return BardzellCochain(n, vals)

    def G_op(self, g):
        """``G^n(g) = g G_n``, evaluated lazily."""
        return GCochain(self, g)

    def H_op(self, f, sign_convention=1):
        """``H^n(f) = (+-1) (-1)^{n-1} f H_{n-1}``, lazily.

        ``sign_convention=1`` is the plain ``(-1)^{n-1} H^n(f) = f H_{n-1}``.
        """
        if f.degree < 1:
            raise ValueError("H^n needs n >= 1")
        return HCochain(self, f, sign_convention)


def eval_bardzell_on(A, g, x):
    """``g^`` on a resolution element ``(L, w_support, R) -> c``."""
    out = {}
    for (L, ws, R), c in x.items():
        for p, k in g.value(ws).items():
            r = A.path_product(L, p)
            if r is None:
                continue
            r = A.path_product(r, R)
            if r is not None:
                add_term(out, r, c * k)
    return out


class GCochain(Cochain):
    def __init__(self, comp, g):
        self.comp = comp
        self.g = g
        self.degree = g.degree
        self._cache = {}

    def value(self, mid):
        got = self._cache.get(mid)
        if got is None:
            comp = self.comp
            if self.degree == 0:
                got = dict(self.g.value(mid[0]))
            else:
                got = eval_bardzell_on(comp.A, self.g, comp.G_chain(mid))
            self._cache[mid] = got
        return got


class HCochain(Cochain):
    def __init__(self, comp, f, sign_convention=1):
        self.comp = comp
        self.f = f
        self.degree = f.degree - 1
        n = f.degree
        self.sign = sign_convention * (1 if (n - 1) % 2 == 0 else -1)
        self._cache = {}

    def value(self, mid):
        got = self._cache.get(mid)
        if got is None:
            if self.degree == 0:
                got = {}
            else:
                v = self.f.evaluate_chain(self.comp.A, self.comp.H_chain(mid))
                got = {p: self.sign * c for p, c in v.items()} if v else {}
            self._cache[mid] = got
        return got


# -- verification -------------------------------------------------------------

def _bad(name, where, got):
    return {"status": "fail", "counterexample": {"input": where, "residual": repr(got)}}


def _fmt_mid(mid):
    return " | ".join(str(p) for p in mid)


def verify_contraction(A, N, variants=VARIANTS, stop_on_failure=True):
    """Check every contraction identity on generators of degree <= N.

    Tries the G variants in order and returns ``(comparison, report)`` for
    the first one passing everything.
    """
    if N < 1:
        raise ValueError("N must be >= 1")
    reports = {}
    for variant in variants:
        comp = Comparison(A, variant)
        rep = contraction_report(comp, N, stop_on_failure)
        reports[variant] = rep
        if all(r["status"] == "pass" for r in rep.values()):
            return comp, {"variant": variant, "max_degree": N, "identities": rep,
                          "rejected": {v: failed_names(r) for v, r in reports.items() if v != variant}}
    detail = {v: {k: r for k, r in rep.items() if r["status"] != "pass"} for v, rep in reports.items()}
    raise ContractionError("no G variant satisfies the contraction identities: %s"
                           % json.dumps(detail, default=str)[:2000])


def failed_names(rep):
    return sorted(k for k, r in rep.items() if r["status"] != "pass")


class _Stop(Exception):
    pass


def contraction_report(comp, N, stop_on_failure=False):
    """``{identity: {checked_degree, status, counterexample?}}`` up to degree N."""
    checks = {}

    def record(name, deg, bad):
        r = checks.setdefault(name, {"checked_degree": -1, "status": "pass"})
        if r["status"] == "pass":
            if bad is None:
                r["checked_degree"] = max(r["checked_degree"], deg)
            else:
                r.update(bad)
                r["checked_degree"] = deg
                if stop_on_failure:
                    raise _Stop

    try:
        _run_checks(comp, N, record)
    except _Stop:
        pass
    return checks


def _run_checks(comp, N, record):
    A = comp.A

    # degree 0: F_0 G_0 = Id
    for v in A.vertices:
        e = A.e(v)
        x = {(e, (), e): Fraction(1)}
        got = comp.F_apply(comp.G_apply(x), 0)
        record("FG=Id (degree 0)", 0, None if got == x else _bad("", "e" + v, got))

    for n in range(1, N + 1):
        mids = enum_bar_basis(A, n)
        aps = compute_AP(A, n)
        # s d + d s = Id on every basis tensor a (x) v (x) b
        for mid in mids:
            for a in A.paths_into(mid[0].source):
                for b in A.paths_from(mid[-1].target):
                    x = {(a, mid, b): Fraction(1)}
                    lhs = bar_d(A, bar_s(A, x))
                    add_into(lhs, bar_s(A, bar_d(A, x)))
                    record("Id = s d + d s", n, None if lhs == x else
                           _bad("", "%s (x) %s (x) %s" % (a, _fmt_mid(mid), b), lhs))
                    if n >= 1:
                        ss = bar_s(A, bar_s(A, x))
                        record("s s = 0", n, None if not ss else _bad("", _fmt_mid(mid), ss))
        for w in aps:
            Fw = comp.F_chain(w)
            # shape 1 (x) x
            record("F has trivial left factor", n,
                   None if all(not a.arrows for (a, _, _) in Fw) else _bad("", str(w), Fw))
            # d F = F delta
            if n >= 1:
                lhs = bar_d(A, Fw)
                rhs = comp.F_apply(delta_chain(A, w), n - 1)
                record("dF = F delta", n, None if lhs == rhs else _bad("", str(w), (lhs, rhs)))
            # G F = Id
            got = comp.G_apply(Fw)
            want = {(A.e(w.support.source), w.support, A.e(w.support.target)): Fraction(1)}
            record("GF = Id", n, None if got == want else _bad("", str(w), got))
            # H F = 0
            hf = comp.H_apply(Fw)
            record("H F = 0", n, None if not hf else _bad("", str(w), hf))
            # (Id (x) H_{n-1}) F_n = 0
            if n >= 2:
                idh = id_tensor_H(comp, Fw)
                record("(Id x H) F = 0", n, None if not idh else _bad("", str(w), idh))
        for w in compute_AP(A, n + 1) if n + 1 <= N + 1 else []:
            if n + 1 >= 2:
                idh = id_tensor_H(comp, comp.F_chain(w))
                record("(Id x H) F = 0", n + 1, None if not idh else _bad("", str(w), idh))
        for mid in mids:
            x = comp._unit(mid)
            # delta G = G d
            if n >= 1:
                lhs = resolution_d(A, comp.G_apply(x), n)
                rhs = comp.G_apply(bar_d(A, x))
                record("delta G = G d", n, None if lhs == rhs else _bad("", _fmt_mid(mid), (lhs, rhs)))
            Hx = comp.H_chain(mid)
            # d H + H d = F G - Id
            lhs = bar_d(A, Hx)
            add_into(lhs, comp.H_apply(bar_d(A, x)))
            rhs = comp.FG_chain(mid)
            add_into(rhs, x, -1)
            record("dH + Hd = FG - Id", n, None if lhs == rhs else _bad("", _fmt_mid(mid), (lhs, rhs)))
            # G H = 0
            gh = comp.G_apply(Hx)
            record("G H = 0", n, None if not gh else _bad("", _fmt_mid(mid), gh))
            # H H = 0
            hh = comp.H_apply(Hx)
            record("H H = 0", n, None if not hh else _bad("", _fmt_mid(mid), hh))
            # (Id (x) H_n) H_n = 0
            idh = id_tensor_H(comp, Hx)
            record("(Id x H) H = 0", n, None if not idh else _bad("", _fmt_mid(mid), idh))
            # closed form agrees with the general recursion
            rec = comp.H_chain_recursive(mid)
            record("H closed form = recursion", n, None if rec == Hx else _bad("", _fmt_mid(mid), (rec, Hx)))
        # delta delta = 0 and d d = 0 at this degree
        if n >= 2:
            for w in aps:
                dd = resolution_d(A, delta_chain(A, w), n - 1)
                record("delta delta = 0", n, None if not dd else _bad("", str(w), dd))
            for mid in mids:
                dd = bar_d(A, bar_d(A, comp._unit(mid)))
                record("d d = 0", n, None if not dd else _bad("", _fmt_mid(mid), dd))


def id_tensor_H(comp, x):
    """``(Id (x) H_k)`` on chains ``1 (x) v_1 (x) y (x) b`` of degree k+1."""
    A = comp.A
    out = {}
    for (a, mid, b), c in x.items():
        if len(mid) < 2:
            continue
        v1 = mid[0]
        inner = comp.H_chain(mid[1:])
        for (a2, m2, b2), k in inner.items():
            # v1 (x) (a2 (x) m2 (x) b2): a2 is a unit
            bb = A.path_product(b2, b)
            if bb is not None:
                add_term(out, (a, (v1,) + m2, bb), c * k)
    return out


def cochain_equal(A, f, g, degree=None):
    """Compare two cochains on the full tuple basis."""
    n = f.degree if degree is None else degree
    for mid in enum_bar_basis(A, n):
        if f.value(mid) != g.value(mid):
            return False
    return True


# -- regularization of a homotopy --------------------------------------------

def regularize_homotopy(h, iota, pi, d, matmul, sub, identity):
    """A homotopy with all side conditions, built from one that only satisfies
    ``iota pi - Id = h d + d h``.

    With ``hh = (iota pi - Id) h (iota pi - Id)`` the product ``hh d hh``
    satisfies ``pi h' = 0``, ``h' iota = 0`` and ``h' h' = 0`` but the homotopy
    equation with the opposite sign; the result is its negative
    ``-hh d hh = (iota pi - Id) hh d hh``.  Works on any matrix-like objects given
    the ring operations.
    """
    p = sub(matmul(iota, pi), identity)
    hh = matmul(matmul(p, h), p)
    return matmul(p, matmul(matmul(hh, d), hh))
