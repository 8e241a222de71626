"""Bundled reference corpus: arrangements, combinatorics, wiring diagrams.

Two families over cyclotomic fields (ten lines over Q(zeta_5), eleven over
Q(zeta_7)), their one-line extensions that kill all combinatorial symmetry,
the printed reference combinatorics, and hand-checked braided wiring
diagrams for the first family.  Everything here is data; the algorithms
live in the other modules.
"""

from __future__ import annotations

from fractions import Fraction

from .arrangement import Arrangement, ProjLine, intersect, line_through
from .combinatorics import Combinatorics
from .errors import ArrlinkError
from .numberfield import NumberField

Q5_MIN = (1, 1, 1, 1, 1)
# exp(6i*pi/5): the reference wiring diagrams below were drawn with this
# conjugate as alpha, so the designated root must match or the geometric
# method computes a Galois twin of each indexed arrangement.
Q5_HINT = (Fraction("-0.8090170"), Fraction("-0.5877853"))
Q7_MIN = (1, 1, 1, 1, 1, 1, 1)
Q7_HINT = (Fraction("0.6234898"), Fraction("0.7818315"))
OMEGA_MIN = (1, 1, 1)
OMEGA_HINT = (Fraction("-0.5"), Fraction("0.8660254"))


def field_q5() -> NumberField:
    """Q(zeta_5), designated root matching the reference diagrams."""
    return NumberField.create(Q5_MIN, Q5_HINT)


def field_q7() -> NumberField:
    return NumberField.create(Q7_MIN, Q7_HINT)


def field_omega() -> NumberField:
    """Q(omega) for a primitive cube root of unity."""
    return NumberField.create(OMEGA_MIN, OMEGA_HINT)


def _m_covectors(alpha):
    a = alpha
    one = alpha.field.one
    return [
        (0, 0, 1),
        (1, 0, 0),
        (a * a + a, -(a + 1), one),
        (0, 1, 0),
        (0, 1, -1),
        (1, 0, -1),
        (a, -(a + 1), one),
        (a * a + a, -(a * a + a + 1), one),
        (a, -one, one),
        (a**3, one, 0),
    ]


def _m_ext_covector(alpha):
    a = alpha
    return (a * a + 2 * a + 1, a**3 - a - 2, alpha.field.one)


def _n_covectors(alpha):
    a = alpha
    one = alpha.field.one
    return [
        (0, 0, 1),
        (a, -one, one),
        (a * a + a, -a, a + 1),
        (1, 0, 0),
        (one, a, -(a + 1)),
        (a + 1, -one, 0),
        (1, 0, -1),
        (a, a * a, -(a**3 + a * a + a)),
        (0, 1, 0),
        (0, 1, -1),
        (0, a * a + 1, -(a * a + a + 1)),
    ]


def arrangement_m(i: int) -> Arrangement:
    """Ten lines over Q(zeta_5); the index picks the conjugate alpha = zeta^i."""
    if i not in (1, 2, 3, 4):
        raise ArrlinkError("index must be 1..4")
    field = field_q5()
    alpha = field.alpha**i
    lines = [ProjLine(field, c) for c in _m_covectors(alpha)]
    return Arrangement(field, lines, name=f"M{i}")


def arrangement_m_ext(i: int) -> Arrangement:
    """The M family plus an eleventh line through two of its double points."""
    base = arrangement_m(i)
    field = base.field
    alpha = field.alpha**i
    lines = list(base.lines) + [ProjLine(field, _m_ext_covector(alpha))]
    return Arrangement(field, lines, name=f"M{i}ext")


def arrangement_n(i: int) -> Arrangement:
    """Eleven lines over Q(zeta_7); index picks alpha = zeta^i."""
    if i not in (1, 2, 3, 4, 5, 6):
        raise ArrlinkError("index must be 1..6")
    field = field_q7()
    alpha = field.alpha**i
    lines = [ProjLine(field, c) for c in _n_covectors(alpha)]
    return Arrangement(field, lines, name=f"N{i}")


def arrangement_n_ext(i: int) -> Arrangement:
    """The N family plus a twelfth line through a quadruple and a double point."""
    base = arrangement_n(i)
    lines = list(base.lines)
    p = intersect(lines[0], lines[8])  # lines 1 and 9; also on 10 and 11
    q = intersect(lines[2], lines[6])  # lines 3 and 7
    l12 = line_through(p, q)
    return Arrangement(base.field, lines + [l12], name=f"N{i}ext")


def arrangement_triangle() -> Arrangement:
    """Three coordinate lines over Q: the smallest valid arrangement."""
    field = NumberField.create((0, 1), (0, 0))
    lines = [ProjLine(field, c) for c in ((1, 0, 0), (0, 1, 0), (0, 0, 1))]
    return Arrangement(field, lines, name="triangle")


COMB_C = Combinatorics(
    10,
    [
        (1, 2, 6), (1, 3, 9), (1, 4, 5), (1, 7), (1, 8, 10),
        (2, 3, 7), (2, 4, 10), (2, 5, 9), (2, 8),
        (3, 4, 8), (3, 5), (3, 6, 10),
        (4, 6), (4, 7, 9),
        (5, 6, 7, 8), (5, 10),
        (6, 9),
        (7, 10),
        (8, 9),
        (9, 10),
    ],
)

COMB_C_EXT = Combinatorics(
    11,
    [
        (1, 2, 6), (1, 3, 9), (1, 4, 5), (1, 7), (1, 8, 10), (1, 11),
        (2, 3, 7), (2, 4, 10), (2, 5, 9), (2, 8), (2, 11),
        (3, 4, 8), (3, 5), (3, 6, 10), (3, 11),
        (4, 6), (4, 7, 9), (4, 11),
        (5, 6, 7, 8), (5, 10, 11),
        (6, 9), (6, 11),
        (7, 10), (7, 11),
        (8, 9, 11),
        (9, 10),
    ],
)

COMB_D = Combinatorics(
    11,
    [
        (1, 2), (1, 3, 6), (1, 4, 7), (1, 5, 8), (1, 9, 10, 11),
        (2, 3, 9), (2, 4, 10), (2, 5, 11), (2, 6, 7, 8),
        (3, 4, 5), (3, 7), (3, 8, 11), (3, 10),
        (4, 6, 9), (4, 8), (4, 11),
        (5, 6), (5, 7, 10), (5, 9),
        (6, 10), (6, 11),
        (7, 9), (7, 11),
        (8, 9), (8, 10),
    ],
)

AUT_C_GENERATOR = (2, 3, 4, 1, 6, 7, 8, 5, 10, 9)  # (1,2,3,4)(5,6,7,8)(9,10)
AUT_D_GENERATORS = (
    (1, 2, 4, 5, 3, 7, 8, 6, 10, 11, 9),  # (3,4,5)(6,7,8)(9,10,11)
    (2, 1, 3, 4, 5, 9, 10, 11, 6, 7, 8),  # (1,2)(6,9)(7,10)(8,11)
)

# Braided wiring diagrams for the first family, read off the plotted
# projection: initial strand labels top to bottom, then one entry per
# singular point swept left to right.  The braid tuple acts before its
# point; supports list the crossing lines in top-to-bottom order there.
W_M1_STRANDS = (8, 6, 7, 5, 2, 1, 10, 9, 4, 3)
W_M1_EVENTS = (
    ((), (8, 6, 7, 5)),
    ((), (8, 2)),
    ((), (8, 1, 10)),
    ((), (8, 9)),
    ((), (8, 4, 3)),
    ((), (1, 9, 3)),
    ((-7, 8, 4, 5), (6, 10, 3)),
    ((), (6, 2, 1)),
    ((), (6, 4)),
    ((), (6, 9)),
    ((5, -4, -3, -7), (7, 2, 3)),
    ((), (7, 10)),
    ((), (7, 1)),
    ((), (7, 9, 4)),
    ((6, 2, 5), (10, 9)),
    ((3,), (5, 2, 9)),
    ((), (5, 3)),
    ((), (5, 10)),
    ((), (5, 1, 4)),
    ((-1, -2, -1, -3, -4, -5), (2, 10, 4)),
)

W_M3_STRANDS = (8, 7, 5, 6, 1, 10, 9, 4, 3, 2)
W_M3_EVENTS = (
    ((), (8, 7, 5, 6)),
    ((), (8, 1, 10)),
    ((), (8, 9)),
    ((), (8, 4, 3)),
    ((), (8, 2)),
    ((), (1, 9, 3)),
    ((-6, -5, 8, 7), (7, 10)),
    ((), (7, 1)),
    ((), (7, 3, 2)),
    ((), (7, 9, 4)),
    ((5, -6, 4, -7), (5, 10)),
    ((), (5, 3)),
    ((), (5, 1, 4)),
    ((), (5, 9, 2)),
    ((6, 5), (6, 10, 3)),
    ((), (6, 4)),
    ((), (6, 9)),
    ((), (6, 1, 2)),
    ((-2,), (10, 9)),
    ((-3, -4, 2, -5, 5), (10, 4, 2)),
)
