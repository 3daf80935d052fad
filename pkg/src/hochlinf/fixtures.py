"""Small monomial algebras used throughout the tests and the CLI."""

from .pathalg import Quiver, build_algebra, truncated_algebra
from .bardzell import basis_map


def line3():
    """1 -a-> 2 -b-> 3 -c-> 4 with ab = bc = 0."""
    q = Quiver("1234", [("a", 1, 2), ("b", 2, 3), ("c", 3, 4)])
    return build_algebra(q, ["a b", "b c"], name="LINE3")


def quadratic_six():
    """Six-vertex quadratic algebra; l_n(f^n) is nonzero at n = 3 and n = 6 (checked up to 7)."""
    q = Quiver("123456", [
        ("a1", 1, 2), ("a2", 2, 3), ("a3", 3, 6),
        ("b1", 2, 5), ("b2", 5, 3), ("d", 5, 4),
        ("m", 2, 4), ("g1", 3, 4), ("g2", 4, 6),
    ])
    return build_algebra(q, ["a1 a2", "a2 a3", "b2 a3", "b2 g1", "b1 d"], name="EX1")


def quadratic_six_f(A):
    return (basis_map(A, "a1 a2", "a1 b1 b2") + basis_map(A, "b1 d", "a2 g1")
            + basis_map(A, "b1 d", "m") + basis_map(A, "b2 g1", "d")
            + basis_map(A, "b2 a3", "d g2"))


def quadratic_four():
    """1 -a1-> 2 =(b, a2)=> 3 =(g, a3)=> 4 with a1a2 = a2a3 = bg = 0."""
    q = Quiver("1234", [("a1", 1, 2), ("b", 2, 3), ("a2", 2, 3), ("g", 3, 4), ("a3", 3, 4)])
    return build_algebra(q, ["a1 a2", "a2 a3", "b g"], name="EX2")


def quadratic_four_f(A):
    return (basis_map(A, "a1 a2", "a1 b") + basis_map(A, "a2 a3", "a2 g")
            + basis_map(A, "b g", "a2 g") + basis_map(A, "b g", "b a3"))


def rsz1():
    """Radical square zero: a1 a2 a3 line with b: 1 -> 3 and g: 1 -> 4."""
    q = Quiver("1234", [("a1", 1, 2), ("a2", 2, 3), ("a3", 3, 4), ("b", 1, 3), ("g", 1, 4)])
    return truncated_algebra(q, 2, name="RSZ1")


def rsz1_f(A):
    return basis_map(A, "a1 a2", "b") + basis_map(A, "b a3", "g")


def rsz2():
    """Radical square zero: a1: 1->2, a2: 2->1, a3: 1->3, a4: 2->3."""
    q = Quiver("123", [("a1", 1, 2), ("a2", 2, 1), ("a3", 1, 3), ("a4", 2, 3)])
    return truncated_algebra(q, 2, name="RSZ2")


def rsz2_f(A):
    f1 = basis_map(A, "a2 a3", "a4") + basis_map(A, "a1 a4", "a3")
    f2 = basis_map(A, "a1 a2", "e1") + basis_map(A, "a2 a1", "e2")
    return f1, f2


def loop_truncated(n):
    """A loop ``a`` at 1 and ``b: 1 -> 2`` modulo paths of length ``n``."""
    q = Quiver("12", [("a", 1, 1), ("b", 1, 2)])
    return truncated_algebra(q, n, name="TRUNC%d" % n)


def loop_truncated_f(A, n):
    f1 = basis_map(A, ["a"] * (n - 1) + ["b"], ["a"] * (n - 2) + ["b"])
    f2 = basis_map(A, ["a"] * n, ["a"] * (n - 2) if n > 2 else "e1")
    return f1, f2


def j3_line():
    """The nine-vertex algebra kQ/J^3 where l_3 is nonzero on degree (1, 1, 2) inputs."""
    arrows = [("a%d" % i, i, i + 1) for i in range(1, 7)]
    arrows += [("b1", 1, 8), ("b2", 8, 4), ("g1", 8, 9), ("g2", 9, 6), ("m", 1, 7)]
    q = Quiver("123456789", arrows)
    return truncated_algebra(q, 3, name="J3")


def j3_line_f(A):
    f1 = basis_map(A, "a1 a2 a3", "b1 b2")
    f2 = basis_map(A, "b2 a4 a5", "g1 g2")
    f3 = basis_map(A, "b1 g1 g2 a6", "m")
    return f1, f2, f3


def j4_small():
    """Two loops' worth of cycles cut at length 4."""
    q = Quiver("123", [("x", 1, 2), ("y", 2, 1), ("z", 2, 3)])
    return truncated_algebra(q, 4, name="J4")


def all_fixtures():
    return [line3(), quadratic_six(), quadratic_four(), rsz1(), rsz2(),
            loop_truncated(3), loop_truncated(4), j3_line(), j4_small()]
