"""
Homotopy transfer of the dg-Lie structure on normalized Hochschild cochains
to an L-infinity structure on Bardzell's complex, along a contraction
``(F*, G*, H*)`` with ``F* G* = Id``.

All signs use shifted degrees ``|x| = cochain degree - 1``.  With ``phi_1 = G*``,

    v_n   = sum_t sum_{tau in S-(t, n-t)} chi kappa_t [phi_t, phi_{n-t}] tau
    l_n   = F* v_n                                           (n >= 2)
    u_n   = sum_k sum_{tau in S(k, n-k)} (-1)^{k(n-k)+1} chi phi_{n-k+1}(l_k x Id) tau
    phi_n = H*(u_n + v_n)

and ``l_1`` is the differential of the shifted complex.

The engine only needs a contraction object (see ``Contraction``); the
Bardzell instance lives in ``BardzellContraction``.
"""

from itertools import combinations, permutations
from fractions import Fraction
from math import comb

from .barcx import BarCochain, hochschild_d, enum_bar_basis
from .bardzell import BardzellCochain, bardzell_lincomb, complex_differential
from .compare import Comparison, verify_contraction
from .gerst import bracket, lincomb, LazyCochain


# -- signs and unshuffles --------------------------------------------------------

def _inversions(sigma):
    n = len(sigma)
    return [(i, j) for i in range(n) for j in range(i + 1, n) if sigma[i] > sigma[j]]


def koszul_eps(sigma, degrees):
    """Koszul sign of the permutation ``v_1..v_n -> v_{s(1)}..v_{s(n)}``.

    ``sigma`` is 1-based, ``degrees[k-1] = |v_k|``.
    """
    if sorted(sigma) != list(range(1, len(degrees) + 1)):
        raise ValueError("not a permutation of 1..%d" % len(degrees))
    e = 0
    for i, j in _inversions(sigma):
        e += degrees[sigma[i] - 1] * degrees[sigma[j] - 1]
    return -1 if e % 2 else 1


def perm_sign(sigma):
    return -1 if len(_inversions(sigma)) % 2 else 1


def koszul_chi(sigma, degrees):
    return perm_sign(sigma) * koszul_eps(sigma, degrees)


def kappa(sigma, t, degrees):
    """``(-1)^{(t-1) + (n-t-1) sum_{p <= t} |v_{s(p)}|}``."""
    n = len(degrees)
    if not 1 <= t < n:
        raise ValueError("kappa needs 1 <= t < n")
    s = sum(degrees[sigma[p] - 1] for p in range(t))
    return -1 if ((t - 1) + (n - t - 1) * s) % 2 else 1


def enum_unshuffles(t, n, minus=False):
    """``(t, n-t)``-unshuffles as 1-based value tuples, lexicographically.

    ``minus=True`` keeps those with ``s(1) < s(t+1)``.
    """
    if not 1 <= t <= n:
        raise ValueError("need 1 <= t <= n")
    out = []
    for first in combinations(range(1, n + 1), t):
        rest = tuple(k for k in range(1, n + 1) if k not in first)
        if minus and rest and first[0] > rest[0]:
            continue
        out.append(first + rest)
    return out


def count_unshuffles(t, n):
    return comb(n, t)


# -- contraction interface ------------------------------------------------------

class Contraction:
    """What the engine needs.  ``b_*`` acts on the small side, ``c_*`` on the dg-Lie side."""

    def F(self, c):
        raise NotImplementedError

    def G(self, b):
        raise NotImplementedError

    def H(self, c):
        raise NotImplementedError

    def c_bracket(self, x, y):
        raise NotImplementedError

    def dB(self, b):
        raise NotImplementedError

    def dC(self, c):
        raise NotImplementedError

    def b_lincomb(self, pairs, degree):
        raise NotImplementedError

    def c_lincomb(self, pairs, degree):
        return lincomb(pairs, degree=degree)

    def b_is_zero(self, b):
        return b.is_zero()

    def c_is_zero(self, c):
        raise NotImplementedError

    @staticmethod
    def sdeg(x):
        return x.degree - 1


# -- the engine -----------------------------------------------------------------

class TransferEngine:
    """Memoized ``v_n, u_n, l_n, phi_n`` on tuples of small-side elements."""

    def __init__(self, contraction, check_phi=False):
        self.K = contraction
        self.check_phi = check_phi
        self._phi = {}
        self._v = {}
        self._u = {}
        self._l = {}
        self._G = {}

    def degrees(self, args):
        return [self.K.sdeg(a) for a in args]

    def _out_degree(self, args, shift):
        # cochain degree of a map of shifted degree ``shift`` applied to args
        return sum(self.degrees(args)) + shift + 1

    def phi(self, args):
        args = tuple(args)
        n = len(args)
        if n == 1:
            a = args[0]
            got = self._G.get(a)
            if got is None:
                got = self._G[a] = self.K.G(a)
            return got
        got = self._phi.get(args)
        if got is not None:
            return got
        deg = self._out_degree(args, 1 - n)
        s = self.K.c_lincomb([(1, self.u(args)), (1, self.v(args))], deg + 1)
        got = self.K.H(s)
        self._phi[args] = got
        return got

    def phi_from_v(self, args):
        """``H* v_n`` alone, equal to ``phi_n`` when ``H* G* = H* H* = 0``."""
        return self.K.H(self.v(args))

    def v(self, args):
        args = tuple(args)
        n = len(args)
        deg = self._out_degree(args, 2 - n)
        if n < 2:
            return self.K.c_lincomb([], deg)
        got = self._v.get(args)
        if got is not None:
            return got
        degs = self.degrees(args)
        terms = []
        for t in range(1, n):
            for tau in enum_unshuffles(t, n, minus=True):
                c = koszul_chi(tau, degs) * kappa(tau, t, degs)
                left = [args[k - 1] for k in tau[:t]]
                right = [args[k - 1] for k in tau[t:]]
                terms.append((c, self.K.c_bracket(self.phi(left), self.phi(right))))
        got = self.K.c_lincomb(terms, deg)
        self._v[args] = got
        return got

    def l(self, args):
        args = tuple(args)
        n = len(args)
        if n == 1:
            return self.K.dB(args[0])
        got = self._l.get(args)
        if got is None:
            got = self.K.F(self.v(args))
            self._l[args] = got
        return got

    def u(self, args):
        args = tuple(args)
        n = len(args)
        deg = self._out_degree(args, 2 - n)
        if n < 2:
            return self.K.c_lincomb([], deg)
        got = self._u.get(args)
        if got is not None:
            return got
        degs = self.degrees(args)
        terms = []
        for k in range(2, n + 1):
            for tau in enum_unshuffles(k, n):
                c = (-1 if (k * (n - k) + 1) % 2 else 1) * koszul_chi(tau, degs)
                inner = self.l([args[i - 1] for i in tau[:k]])
                if self.K.b_is_zero(inner):
                    continue
                rest = [args[i - 1] for i in tau[k:]]
                terms.append((c, self.phi([inner] + rest)))
        got = self.K.c_lincomb(terms, deg)
        self._u[args] = got
        return got


# -- the Bardzell instance -------------------------------------------------------

class SignConvention:
    """Signs of the two differentials and of ``H*`` relative to the plain ones.

    ``dB = b * (-1)^n delta^n``, ``dC = c * hochschild_d`` and
    ``H*(f) = h * (-1)^{n-1} f H_{n-1}``.
    """

    def __init__(self, name, b, c, h):
        self.name, self.b, self.c, self.h = name, b, c, h

    def __repr__(self):
        return "SignConvention(%s)" % self.name


# ``PLAIN`` uses the differentials as they are; ``SHIFTED`` negates both and
# H*.  Then l_n changes by (-1)^n: the plain structure read through x -> -x,
# with every bracket negated, and both moves preserve the L-infinity
# equations.  Mixing the two sets of signs is not an L-infinity algebra.
PLAIN = SignConvention("plain", 1, 1, 1)
SHIFTED = SignConvention("shifted", -1, -1, -1)
CONVENTIONS = {"plain": PLAIN, "shifted": SHIFTED}


class BardzellContraction(Contraction):
    """Bardzell's complex ``B*(A)[1]`` as a contraction of ``C-bar*(A)[1]``."""

    def __init__(self, A, comparison=None, convention=PLAIN):
        self.A = A
        self.comp = comparison if comparison is not None else Comparison(A)
        self.conv = convention

    def F(self, c):
        if c.degree < 0:
            return BardzellCochain(c.degree, {})
        return self.comp.F_op(c)

    def G(self, b):
        return self.comp.G_op(b)

    def H(self, c):
        if c.degree < 1:
            return self.c_lincomb([], c.degree - 1)
        return self.comp.H_op(c, self.conv.h)

    def c_bracket(self, x, y):
        return bracket(self.A, x, y)

    def dB(self, b):
        if b.degree < 0:
            return BardzellCochain(b.degree + 1, {})
        d = complex_differential(self.A, b)
        return d if self.conv.b == 1 else -d

    def dC(self, c):
        if c.degree < 0:
            return BarCochain(c.degree + 1, {})
        d = hochschild_d(self.A, c)
        return d if self.conv.c == 1 else -d

    def b_lincomb(self, pairs, degree):
        pairs = [(c, f) for c, f in pairs if c]
        if not pairs:
            return BardzellCochain(degree, {})
        return bardzell_lincomb(pairs)

    def c_is_zero(self, c):
        return c_is_zero(self.A, c)

    def c_equal(self, x, y):
        return c_is_zero(self.A, lincomb([(1, x), (-1, y)], degree=x.degree))


def c_is_zero(A, c):
    if c.degree < 0:
        return True
    for mid in enum_bar_basis(A, c.degree):
        if c.value(mid):
            return False
    return True


def bardzell_engine(A, convention=PLAIN, comparison=None, verify_degree=None):
    """A transfer engine for ``A``; optionally validates the contraction first."""
    if comparison is None and verify_degree:
        comparison, _ = verify_contraction(A, verify_degree)
    return TransferEngine(BardzellContraction(A, comparison, convention))


def eval_l(engine, args):
    return engine.l(args)


def eval_phi(engine, args, check=True):
    """``phi_n``; with ``check`` also compares it with ``H* v_n``."""
    got = engine.phi(args)
    if check and len(args) >= 2:
        K = engine.K
        other = engine.phi_from_v(args)
        if not K.c_equal(got, other):
            raise ArithmeticError("H*(u_n + v_n) and H* v_n disagree: broken contraction")
    return got


# -- identity contraction (B = C, H = 0) ----------------------------------------

class IdentityContraction(Contraction):
    """A dg-Lie algebra of normalized cochains contracted onto itself."""

    def __init__(self, A):
        self.A = A

    def F(self, c):
        return c.materialize(self.A)

    def G(self, b):
        return b

    def H(self, c):
        return LazyCochain(c.degree - 1, lambda mid: {}, "0")

    def c_bracket(self, x, y):
        return bracket(self.A, x, y)

    def dB(self, b):
        return -hochschild_d(self.A, b)

    def dC(self, c):
        return -hochschild_d(self.A, c)

    def b_lincomb(self, pairs, degree):
        out = BarCochain(degree, {})
        for c, f in pairs:
            if c:
                out = out + Fraction(c) * f
        return out

    def c_is_zero(self, c):
        return c_is_zero(self.A, c)

    def c_equal(self, x, y):
        return c_is_zero(self.A, lincomb([(1, x), (-1, y)], degree=x.degree))


# -- identity checks -------------------------------------------------------------

def _sum(K, side, terms, degree):
    if side == "b":
        return K.b_lincomb(terms, degree)
    return K.c_lincomb(terms, degree)


def jacobi_residual(engine, args):
    """``sum_{i+j=n+1} sum_{s in S(i,n-i)} (-1)^{i(j-1)} chi l_j(l_i x Id) s``."""
    K = engine.K
    n = len(args)
    degs = engine.degrees(args)
    deg = sum(degs) + 3 - n + 1
    terms = []
    for i in range(1, n + 1):
        j = n + 1 - i
        for s in enum_unshuffles(i, n):
            c = (-1 if (i * (j - 1)) % 2 else 1) * koszul_chi(s, degs)
            inner = engine.l([args[k - 1] for k in s[:i]])
            if K.b_is_zero(inner):
                continue
            terms.append((c, engine.l([inner] + [args[k - 1] for k in s[i:]])))
    return K.b_lincomb(terms, deg)


def permuted(args, sigma):
    return tuple(args[k - 1] for k in sigma)


def skew_defect(engine, which, args, sigma):
    """``m(s args) - chi(s) m(args)`` for ``m`` in l, u, v, phi."""
    K = engine.K
    fn = getattr(engine, which)
    a = fn(permuted(args, sigma))
    b = fn(args)
    c = koszul_chi(sigma, engine.degrees(args))
    if which == "l":
        return K.b_lincomb([(1, a), (-c, b)], a.degree)
    return K.c_lincomb([(1, a), (-c, b)], a.degree)


def weak_morphism_residual(engine, args):
    """``d phi_n + sum chi (-1)^{k(j-1)+1} phi_j(l_k x Id) + sum chi kappa [phi_s, phi_t]``."""
    K = engine.K
    n = len(args)
    degs = engine.degrees(args)
    deg = sum(degs) + (2 - n) + 1
    terms = [(1, K.dC(engine.phi(args)))]
    for k in range(1, n + 1):
        j = n + 1 - k
        for s in enum_unshuffles(k, n):
            c = koszul_chi(s, degs) * (-1 if (k * (j - 1) + 1) % 2 else 1)
            inner = engine.l([args[i - 1] for i in s[:k]])
            if K.b_is_zero(inner):
                continue
            terms.append((c, engine.phi([inner] + [args[i - 1] for i in s[k:]])))
    terms.append((1, engine.v(args)) if n >= 2 else (0, None))
    return K.c_lincomb([t for t in terms if t[0]], deg)


def phi_v_residual(engine, args):
    """``sum_{t=2}^{n-1} sum_{S(t,n-t)} chi kappa_t [v_t, phi_{n-t}] tau``."""
    K = engine.K
    n = len(args)
    degs = engine.degrees(args)
    deg = sum(degs) + 3 - n + 1
    terms = []
    for t in range(2, n):
        for tau in enum_unshuffles(t, n):
            c = koszul_chi(tau, degs) * kappa(tau, t, degs)
            left = engine.v([args[k - 1] for k in tau[:t]])
            right = engine.phi([args[k - 1] for k in tau[t:]])
            terms.append((c, K.c_bracket(left, right)))
    return K.c_lincomb(terms, deg)


def induction_residual(engine, args, sign_exponent=True):
    """``d phi_n - e sum_{S(1,n-1)} chi phi_n(dB x Id) + u_n + v_n``.

    ``e = (-1)^{n+1}`` with ``sign_exponent``; ``e = 1`` otherwise.
    """
    K = engine.K
    n = len(args)
    degs = engine.degrees(args)
    deg = sum(degs) + (2 - n) + 1
    e = (-1 if (n + 1) % 2 else 1) if sign_exponent else 1
    terms = [(1, K.dC(engine.phi(args))), (1, engine.u(args)), (1, engine.v(args))]
    for s in enum_unshuffles(1, n):
        c = koszul_chi(s, degs)
        inner = K.dB(args[s[0] - 1])
        if K.b_is_zero(inner):
            continue
        terms.append((-e * c, engine.phi([inner] + [args[i - 1] for i in s[1:]])))
    return K.c_lincomb(terms, deg)


def check_linf(engine, args, N):
    """Skew symmetry and generalized Jacobi up to arity ``N`` on prefixes of ``args``."""
    if N < 2:
        raise ValueError("N must be >= 2")
    K = engine.K
    report = {"status": "pass", "checked": []}
    for n in range(1, N + 1):
        a = tuple(args[:n])
        if len(a) < n:
            break
        r = jacobi_residual(engine, a)
        if not K.b_is_zero(r):
            report.update(status="fail", identity="jacobi", arity=n, residual=r)
            return report
        report["checked"].append("jacobi_%d" % n)
        if n >= 2:
            for sigma in list(permutations(range(1, n + 1)))[1:]:
                d = skew_defect(engine, "l", a, sigma)
                if not K.b_is_zero(d):
                    report.update(status="fail", identity="skew", arity=n, permutation=sigma,
                                  residual=d)
                    return report
            report["checked"].append("skew_%d" % n)
    return report


def check_weak_morphism(engine, args):
    K = engine.K
    r = weak_morphism_residual(engine, args)
    if K.c_is_zero(r):
        return {"status": "pass", "arity": len(args)}
    return {"status": "fail", "arity": len(args), "residual": r}
