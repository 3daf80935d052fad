"""
Quivers, paths and monomial algebras ``A = kQ/I``.

A path is stored as ``Path(source, target, arrows)`` with ``arrows`` a tuple
of arrow names read left to right; ``target(arrows[i]) == source(arrows[i+1])``.
Trivial paths (the idempotents ``e_v``) have ``arrows == ()``.

Algebra elements are plain dicts ``Path -> Fraction`` over the basis of
nonzero paths; the helpers below never store zero coefficients.
"""

from collections import namedtuple
from fractions import Fraction


class AlgebraError(ValueError):
    """Ill-formed quiver, path or relation data."""


class NotFiniteDimensional(AlgebraError):
    pass


Arrow = namedtuple("Arrow", "name source target")


class Path(namedtuple("Path", "source target arrows")):
    __slots__ = ()

    def __len__(self):
        return len(self.arrows)

    @property
    def trivial(self):
        return not self.arrows

    def __str__(self):
        if not self.arrows:
            return "e%s" % (self.source,)
        return " ".join(self.arrows)

    def sub(self, start, end, quiver):
        """The subpath made of arrows ``start .. end-1``."""
        if start == end:
            if start == 0:
                v = self.source
            else:
                v = quiver.arrows[self.arrows[start - 1]].target
            return Path(v, v, ())
        arrs = self.arrows[start:end]
        return Path(quiver.arrows[arrs[0]].source, quiver.arrows[arrs[-1]].target, arrs)


class Quiver:
    def __init__(self, vertices, arrows):
        self.vertices = tuple(str(v) for v in vertices)
        if len(set(self.vertices)) != len(self.vertices):
            raise AlgebraError("duplicate vertex names")
        self.arrows = {}
        for a in arrows:
            name, src, tgt = (str(x) for x in a)
            if name in self.arrows:
                raise AlgebraError("duplicate arrow name %r" % name)
            if src not in self.vertices or tgt not in self.vertices:
                raise AlgebraError("arrow %r has an undeclared endpoint" % name)
            if name.startswith("e") and name[1:] in self.vertices:
                raise AlgebraError("arrow name %r clashes with a trivial path" % name)
            self.arrows[name] = Arrow(name, src, tgt)
        self.out_arrows = {v: [] for v in self.vertices}
        for a in self.arrows.values():
            self.out_arrows[a.source].append(a)

    def trivial(self, v):
        v = str(v)
        if v not in self.vertices:
            raise AlgebraError("unknown vertex %r" % v)
        return Path(v, v, ())

    def path(self, spec):
        """Build a path from ``"a b c"``, a sequence of arrow names, or ``"e1"``."""
        if isinstance(spec, Path):
            return spec
        names = spec.split() if isinstance(spec, str) else list(spec)
        if len(names) == 1 and names[0] not in self.arrows and names[0].startswith("e"):
            return self.trivial(names[0][1:])
        if not names:
            raise AlgebraError("empty path specification")
        for n in names:
            if n not in self.arrows:
                raise AlgebraError("unknown arrow %r" % n)
        for x, y in zip(names, names[1:]):
            if self.arrows[x].target != self.arrows[y].source:
                raise AlgebraError("arrows %r and %r do not compose" % (x, y))
        return Path(self.arrows[names[0]].source, self.arrows[names[-1]].target, tuple(names))

    def concat(self, p, q):
        """Concatenation in kQ, or None when the endpoints do not match."""
        if p.target != q.source:
            return None
        return Path(p.source, q.target, p.arrows + q.arrows)


class MonomialAlgebra:
    """``kQ/I`` with ``I`` generated by a minimal set of paths ``relations``."""

    def __init__(self, quiver, relations, name=None):
        self.quiver = quiver
        self.name = name
        rels = []
        for r in relations:
            r = quiver.path(r)
            if len(r) < 2:
                raise AlgebraError("relation %s has length < 2" % (r,))
            if r in rels:
                raise AlgebraError("duplicate relation %s" % (r,))
            rels.append(r)
        relset = {r.arrows for r in rels}
        for r in rels:
            for i in range(len(r)):
                for j in range(i + 1, len(r) + 1):
                    if (i, j) != (0, len(r)) and r.arrows[i:j] in relset:
                        raise AlgebraError("relation %s is not minimal: contains %s"
                                           % (r, " ".join(r.arrows[i:j])))
        self.relations = tuple(rels)
        self.relation_words = relset
        self.relation_lengths = sorted({len(r) for r in rels})
        self.max_relation_length = max(self.relation_lengths, default=1)
        self._enumerate_basis()

    def _check_finite(self):
        """Look for a cycle in the automaton of (vertex, last L-1 arrows) states.

        Appending an arrow to a nonzero path is allowed iff no relation becomes a
        suffix, and that only depends on the state.  A is finite dimensional iff
        no cycle of states is reachable.
        """
        q = self.quiver
        keep = max(self.max_relation_length - 1, 0)
        color = {}

        def succ(state):
            v, tail = state
            for a in q.out_arrows[v]:
                cand = tail + (a.name,)
                if not self._has_relation_suffix(cand):
                    yield (a.target, cand[-keep:] if keep else ())

        for v in q.vertices:
            root = (v, ())
            if root in color:
                continue
            color[root] = 1
            stack = [(root, succ(root))]
            while stack:
                state, it = stack[-1]
                nxt = next(it, None)
                if nxt is None:
                    color[state] = 2
                    stack.pop()
                    continue
                c = color.get(nxt)
                if c == 1:
                    raise NotFiniteDimensional(
                        "not finite dimensional: a cycle through %s never meets a relation" % nxt[0])
                if c is None:
                    color[nxt] = 1
                    stack.append((nxt, succ(nxt)))

    def _enumerate_basis(self):
        self._check_finite()
        q = self.quiver
        layer = [q.trivial(v) for v in q.vertices]
        basis = list(layer)
        by_len = {0: list(layer)}
        length = 0
        while layer:
            length += 1
            nxt = []
            for p in layer:
                for a in q.out_arrows[p.target]:
                    cand = p.arrows + (a.name,)
                    if not self._has_relation_suffix(cand):
                        nxt.append(Path(p.source, a.target, cand))
            layer = nxt
            if layer:
                by_len[length] = layer
                basis.extend(layer)
        self.basis = tuple(basis)
        self.basis_set = frozenset(basis)
        self.radical_basis = tuple(p for p in basis if p.arrows)
        self.max_path_length = max(by_len)
        self.index = {p: i for i, p in enumerate(self.basis)}
        self._rad_from = {v: [] for v in q.vertices}
        for p in self.radical_basis:
            self._rad_from[p.source].append(p)
        self._parallel = {}
        for p in basis:
            self._parallel.setdefault((p.source, p.target), []).append(p)

    def _has_relation_suffix(self, arrows):
        n = len(arrows)
        for k in self.relation_lengths:
            if k <= n and arrows[n - k:] in self.relation_words:
                return True
        return False

    # -- paths ---------------------------------------------------------------

    def path(self, spec):
        return self.quiver.path(spec)

    def e(self, v):
        return self.quiver.trivial(v)

    @property
    def vertices(self):
        return self.quiver.vertices

    def is_nonzero(self, p):
        return p in self.basis_set

    def path_product(self, p, q):
        """Product of two basis paths: a basis path or None (zero)."""
        if p.target != q.source:
            return None
        if not p.arrows:
            return q
        if not q.arrows:
            return p
        r = Path(p.source, q.target, p.arrows + q.arrows)
        return r if r in self.basis_set else None

    def radical_paths_from(self, v):
        return self._rad_from[v]

    def paths_from(self, v):
        """All basis paths (the unit included) starting at ``v``."""
        return [self.e(v)] + self._rad_from[v]

    def paths_into(self, v):
        return [p for p in self.basis if p.target == v]

    def parallel_paths(self, w):
        """Nonzero paths with the same endpoints as ``w`` (trivial ones included)."""
        return list(self._parallel.get((w.source, w.target), ()))

    def is_radical_square_zero(self):
        return self.max_path_length <= 1

    def __repr__(self):
        return "MonomialAlgebra(%s, dim=%d)" % (self.name or "?", len(self.basis))

    # -- elements ------------------------------------------------------------

    def elem(self, spec, coeff=1):
        """The element ``coeff * path`` (zero if the path lies in I)."""
        p = self.path(spec)
        if p not in self.basis_set:
            return {}
        return {p: Fraction(coeff)}

    def multiply(self, x, y):
        out = {}
        for p, a in x.items():
            for q, b in y.items():
                r = self.path_product(p, q)
                if r is not None:
                    add_term(out, r, a * b)
        return out

    def one(self):
        return {self.e(v): Fraction(1) for v in self.vertices}


def add_term(d, key, c):
    """``d[key] += c`` dropping zeros."""
    v = d.get(key)
    if v is None:
        if c:
            d[key] = c
    else:
        v += c
        if v:
            d[key] = v
        else:
            del d[key]


def add_into(d, other, c=1):
    for k, v in other.items():
        add_term(d, k, c * v)
    return d


def scaled(d, c):
    if not c:
        return {}
    return {k: v * c for k, v in d.items()}


def linear_combination(pairs):
    out = {}
    for c, d in pairs:
        add_into(out, d, c)
    return out


def build_algebra(quiver, relations, name=None):
    return MonomialAlgebra(quiver, relations, name=name)


def truncated_algebra(quiver, n, name=None):
    """``kQ/J^n``: every path of length exactly ``n`` is a relation."""
    if n < 2:
        raise AlgebraError("truncation degree must be at least 2")
    rels = []
    layer = [(a.name,) for a in quiver.arrows.values()]
    for _ in range(n - 1):
        layer = [p + (a.name,) for p in layer
                 for a in quiver.out_arrows[quiver.arrows[p[-1]].target]]
    rels = [quiver.path(p) for p in layer]
    return MonomialAlgebra(quiver, rels, name=name)


def format_element(x):
    """Deterministic text form, e.g. ``"2 a b - 1/2 e1"``; ``"0"`` for zero."""
    if not x:
        return "0"
    parts = []
    for p in sorted(x, key=path_sort_key):
        c = x[p]
        parts.append((c, str(p)))
    out = []
    for i, (c, s) in enumerate(parts):
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        term = s if mag == 1 else "%s %s" % (mag, s)
        if i == 0:
            out.append(("-" + term) if sign == "-" else term)
        else:
            out.append("%s %s" % (sign, term))
    return " ".join(out)


def path_sort_key(p):
    return (len(p.arrows), p.arrows, p.source)
