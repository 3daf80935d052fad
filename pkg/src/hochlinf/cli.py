"""
Command line front end.  Every command prints one JSON object on stdout.

Exit codes: 0 success, 1 a verification failed, 2 unparsable input,
3 a domain error (non-admissible algebra, wrong degrees, ...).
"""

import argparse
import json
import random
import re
import sys
from fractions import Fraction

from .pathalg import Quiver, MonomialAlgebra, truncated_algebra, AlgebraError, format_element
from .barcx import BasisTooLarge, enum_bar_basis
from .bardzell import (compute_AP, ap_chain_of, BardzellCochain, format_cochain,
                       random_bardzell_cochain)
from .compare import verify_contraction, ContractionError
from .gerst import hh_dim
from .transfer import bardzell_engine, CONVENTIONS, jacobi_residual, skew_defect
from .mc import mc_residual, MCSeries, mc_check_series
from . import fixtures


class ParseError(ValueError):
    pass


class DomainError(ValueError):
    pass


# -- algebra files -----------------------------------------------------------

def parse_algebra(text, name=None):
    """Read the ``vertices: / arrow: / relations: | truncated:`` format."""
    vertices = None
    arrows = []
    relations = None
    truncated = None
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if ":" not in line:
            raise ParseError("line %d: expected 'key: value'" % lineno)
        key, val = (s.strip() for s in line.split(":", 1))
        if key == "vertices":
            vertices = val.split()
        elif key == "arrow":
            parts = val.split()
            if len(parts) != 3:
                raise ParseError("line %d: arrow needs 'name source target'" % lineno)
            arrows.append(tuple(parts))
        elif key == "relations":
            relations = [r.strip() for r in val.split(";") if r.strip()]
        elif key == "truncated":
            try:
                truncated = int(val)
            except ValueError:
                raise ParseError("line %d: truncated needs an integer" % lineno)
        elif key == "name":
            name = name or val
        else:
            raise ParseError("line %d: unknown key %r" % (lineno, key))
    if vertices is None:
        raise ParseError("missing 'vertices:' line")
    if (relations is None) == (truncated is None):
        raise ParseError("give exactly one of 'relations:' and 'truncated:'")
    try:
        q = Quiver(vertices, arrows)
        if truncated is not None:
            return truncated_algebra(q, truncated, name=name)
        return MonomialAlgebra(q, relations, name=name)
    except AlgebraError as e:
        raise DomainError(str(e))


def load_algebra(args):
    if args.fixture:
        table = {A.name: A for A in fixtures.all_fixtures()}
        if args.fixture not in table:
            raise DomainError("unknown fixture %r; known: %s" % (args.fixture, ", ".join(sorted(table))))
        return table[args.fixture]
    if not args.algebra:
        raise ParseError("give --algebra FILE or --fixture NAME")
    try:
        with open(args.algebra, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as e:
        raise ParseError("cannot read %s: %s" % (args.algebra, e.strerror))
    return parse_algebra(text)


# -- cochain expressions -----------------------------------------------------

_TERM = re.compile(r"\s*([+-])?\s*(\d+(?:/\d+)?)?\s*\(\s*([^()|]*?)\s*\|\|\s*([^()|]*?)\s*\)\s*")


def parse_cochain(text, A, degree=None):
    """``c1 (w1 || g1) + c2 (w2 || g2) ...`` as a BardzellCochain.

    A malformed expression raises ParseError; a well-formed one of the wrong
    ``degree`` raises DomainError.
    """
    text = text.strip()
    if text == "0":
        if degree is None:
            raise ParseError("the zero cochain needs an explicit degree")
        return BardzellCochain(degree, {})
    pos = 0
    vals = {}
    deg = None
    first = True
    while pos < len(text):
        m = _TERM.match(text, pos)
        if not m or m.end() == pos:
            raise ParseError("cannot parse cochain near %r" % text[pos:pos + 20])
        sign, coeff, w, g = m.groups()
        if sign is None and not first:
            raise ParseError("missing '+' or '-' before %r" % m.group(0).strip())
        first = False
        c = Fraction(coeff) if coeff else Fraction(1)
        if sign == "-":
            c = -c
        try:
            wp = A.path(w)
            gp = A.path(g)
        except AlgebraError as e:
            raise ParseError(str(e))
        chain = ap_chain_of(A, wp)
        if chain is None:
            raise ParseError("%s is not an AP chain" % (wp,))
        if deg is None:
            deg = chain.degree
        elif chain.degree != deg:
            raise ParseError("mixed degrees %d and %d in one cochain" % (deg, chain.degree))
        if (gp.source, gp.target) != (wp.source, wp.target):
            raise ParseError("%s is not parallel to %s" % (gp, wp))
        if not A.is_nonzero(gp):
            raise ParseError("%s is zero in the algebra" % (gp,))
        row = vals.setdefault(wp, {})
        row[gp] = row.get(gp, Fraction(0)) + c
        pos = m.end()
    if degree is not None and deg != degree:
        raise DomainError("expected a degree %d cochain, got degree %d" % (degree, deg))
    return BardzellCochain(deg, vals, A=A)


def parse_series(text, A):
    """Lines ``i: <cochain>``; ``#`` comments allowed."""
    coeffs = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if ":" not in line:
            raise ParseError("series line %d: expected 'i: expression'" % lineno)
        i, expr = line.split(":", 1)
        try:
            i = int(i)
        except ValueError:
            raise ParseError("series line %d: bad order %r" % (lineno, i))
        if i < 1:
            raise ParseError("series line %d: orders start at 1" % lineno)
        f = parse_cochain(expr, A, degree=2)
        coeffs[i] = coeffs[i] + f if i in coeffs else f
    return MCSeries(coeffs)


def cochain_json(f):
    return {"degree": f.degree, "text": format_cochain(f),
            "terms": [[str(c), str(w), str(g)] for c, w, g in f.terms()]}


def bar_cochain_json(A, f, limit=200):
    rows = []
    for mid in enum_bar_basis(A, f.degree):
        v = f.value(mid)
        if v:
            rows.append([" | ".join(str(p) for p in mid), format_element(v)])
            if len(rows) >= limit:
                break
    return {"degree": f.degree, "values": rows, "truncated": len(rows) >= limit}


# -- commands ---------------------------------------------------------------

def cmd_ap(A, args):
    out = {}
    for n in range(args.max_degree + 1):
        out[str(n)] = [{"support": str(c.support), "occurrences": [list(o) for o in c.occurrences]}
                       for c in compute_AP(A, n)]
    return 0, out


def cmd_cohomology(A, args):
    if args.degree < 0:
        raise DomainError("degree must be >= 0")
    return 0, {"degree": args.degree, "dimension": hh_dim(A, args.degree)}


def cmd_verify(A, args):
    if args.max_degree < 1:
        raise DomainError("max degree must be >= 1")
    try:
        _, rep = verify_contraction(A, args.max_degree)
    except ContractionError as e:
        return 1, {"status": "fail", "detail": str(e)}
    return 0, dict(rep, status="pass")


def _engine(A, args):
    return bardzell_engine(A, CONVENTIONS[args.convention])


def _cochains(A, exprs):
    return [parse_cochain(e, A) for e in exprs]


def cmd_bracket(A, args):
    f, g = _cochains(A, [args.f, args.g])
    return 0, {"l2": cochain_json(_engine(A, args).l([f, g]))}


def _arity_args(A, args):
    fs = _cochains(A, args.cochains)
    if len(fs) == 1:
        fs = fs * args.arity
    if len(fs) != args.arity:
        raise DomainError("arity %d needs %d cochains (or one, repeated)" % (args.arity, args.arity))
    return fs


def cmd_ln(A, args):
    fs = _arity_args(A, args)
    return 0, {"arity": args.arity, "l": cochain_json(_engine(A, args).l(fs))}


def cmd_phi(A, args):
    fs = _arity_args(A, args)
    return 0, {"arity": args.arity, "phi": bar_cochain_json(A, _engine(A, args).phi(fs))}


def cmd_mc_check(A, args):
    f = parse_cochain(args.f, A, degree=2)
    res, tail = mc_residual(A, f, args.max_arity)
    return (0 if res.is_zero() else 1), {"residual": cochain_json(res), "is_mc": res.is_zero(),
                                         "tail_vanishes": tail, "max_arity": args.max_arity}


def cmd_mc_series(A, args):
    try:
        with open(args.series, encoding="utf-8") as fh:
            s = parse_series(fh.read(), A)
    except OSError as e:
        raise ParseError("cannot read %s: %s" % (args.series, e.strerror))
    rep = mc_check_series(A, s, args.order)
    res = {str(i): format_cochain(r) for i, r in rep["residuals"].items()}
    return (0 if rep["status"] == "pass" else 1), {"order": args.order, "status": rep["status"],
                                                   "residuals": res}


def cmd_linf(A, args):
    rng = random.Random(args.seed)
    E = _engine(A, args)
    degrees = [d for d in (1, 2, 3) if compute_AP(A, d)]
    if not degrees:
        raise DomainError("no nonzero cochains to sample")
    failures = []
    for trial in range(args.trials):
        fs = [random_bardzell_cochain(A, rng.choice(degrees), rng) for _ in range(args.arity)]
        r = jacobi_residual(E, fs)
        if not r.is_zero():
            failures.append({"trial": trial, "identity": "jacobi", "residual": format_cochain(r)})
            continue
        sigma = list(range(1, args.arity + 1))
        rng.shuffle(sigma)
        d = skew_defect(E, "l", fs, tuple(sigma))
        if not d.is_zero():
            failures.append({"trial": trial, "identity": "skew", "residual": format_cochain(d)})
    status = "pass" if not failures else "fail"
    return (0 if not failures else 1), {"arity": args.arity, "trials": args.trials,
                                        "seed": args.seed, "status": status, "failures": failures[:5]}


COMMANDS = {
    "ap": cmd_ap, "cohomology": cmd_cohomology, "verify-contraction": cmd_verify,
    "bracket": cmd_bracket, "ln": cmd_ln, "phi": cmd_phi, "mc-check": cmd_mc_check,
    "mc-series": cmd_mc_series, "linf-check": cmd_linf,
}


def build_parser():
    p = argparse.ArgumentParser(prog="hochlinf", description=__doc__.strip().splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, **kw):
        sp = sub.add_parser(name, **kw)
        g = sp.add_mutually_exclusive_group()
        g.add_argument("--algebra", help="algebra file")
        g.add_argument("--fixture", help="built-in algebra (LINE3, EX1, EX2, RSZ1, RSZ2, ...)")
        return sp

    sp = add("ap", help="list AP_n supports")
    sp.add_argument("--max-degree", type=int, default=3)
    sp = add("cohomology", help="dimension of HH^n")
    sp.add_argument("--degree", type=int, required=True)
    sp = add("verify-contraction", help="check F, G, H identities")
    sp.add_argument("--max-degree", type=int, default=4)
    sp = add("bracket", help="l_2(f, g)")
    sp.add_argument("f")
    sp.add_argument("g")
    sp.add_argument("--convention", choices=sorted(CONVENTIONS), default="plain")
    for name, hlp in (("ln", "l_n(f_1, ..., f_n)"), ("phi", "phi_n(f_1, ..., f_n)")):
        sp = add(name, help=hlp)
        sp.add_argument("--arity", type=int, required=True)
        sp.add_argument("cochains", nargs="+")
        sp.add_argument("--convention", choices=sorted(CONVENTIONS), default="plain")
    sp = add("mc-check", help="partial MC residual of one element")
    sp.add_argument("f")
    sp.add_argument("--max-arity", type=int, default=4)
    sp = add("mc-series", help="order-by-order MC check of a t-series")
    sp.add_argument("series")
    sp.add_argument("--order", type=int, required=True)
    sp = add("linf-check", help="random generalized Jacobi and skew symmetry checks")
    sp.add_argument("--arity", type=int, default=3)
    sp.add_argument("--trials", type=int, default=10)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--convention", choices=sorted(CONVENTIONS), default="plain")
    return p


def _inputs(args):
    return {k: v for k, v in sorted(vars(args).items()) if k != "command" and v is not None}


def run(argv=None, out=None):
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 2 if e.code else 0
    payload = {"command": args.command, "inputs": _inputs(args)}
    try:
        A = load_algebra(args)
        if getattr(args, "arity", 2) < 1 or getattr(args, "max_arity", 2) < 2:
            raise DomainError("arity out of range")
        code, result = COMMANDS[args.command](A, args)
        payload["result"] = result
    except ParseError as e:
        code, payload["error"] = 2, str(e)
    except (DomainError, AlgebraError, BasisTooLarge) as e:
        code, payload["error"] = 3, str(e)
    except ValueError as e:
        code, payload["error"] = 3, str(e)
    json.dump(payload, out, sort_keys=True, indent=2)
    out.write("\n")
    return code


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
