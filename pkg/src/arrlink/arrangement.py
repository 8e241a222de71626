"""Projective lines over a number field and their incidence geometry.

Lines are covectors (a, b, c) with a x + b y + c z = 0; points are
homogeneous coordinate triples.  Both are normalized so the first nonzero
entry equals 1, which makes equality, hashing, and deduplication exact.
Lines or points at infinity need no special treatment.
"""

from __future__ import annotations

from .errors import ArrlinkError
from .numberfield import FieldElement, FieldMismatch, GaloisAutomorphism, NumberField


class IdenticalLines(ArrlinkError):
    """Two equal lines have no unique intersection point."""


class IdenticalPoints(ArrlinkError):
    """Two equal points span no unique line."""


class SingularMatrix(ArrlinkError):
    """The matrix of a projectivity must be invertible."""


class DuplicateLine(ArrlinkError):
    """Arrangements list pairwise distinct lines."""


class PencilRejected(ArrlinkError):
    """All lines through one point: topology is combinatorially forced."""


def _normalize(field: NumberField, coords) -> tuple[FieldElement, ...]:
    vals = []
    for c in coords:
        if isinstance(c, FieldElement):
            if c.field is not field:
                raise FieldMismatch("coordinate from a different field")
            vals.append(c)
        else:
            vals.append(field.from_rational(c))
    if len(vals) != 3:
        raise ArrlinkError("projective coordinates must be triples")
    for c in vals:
        if not c.is_zero():
            inv = c.inverse()
            return tuple(inv * x for x in vals)
    raise ArrlinkError("zero vector is not projective")


class ProjLine:
    """A line in P^2, canonical covector with first nonzero entry 1."""

    __slots__ = ("field", "covector")

    def __init__(self, field: NumberField, coords):
        self.field = field
        self.covector = _normalize(field, coords)

    def contains(self, p: "ProjPoint") -> bool:
        a, b, c = self.covector
        x, y, z = p.coords
        return (a * x + b * y + c * z).is_zero()

    def __eq__(self, other) -> bool:
        if not isinstance(other, ProjLine):
            return NotImplemented
        return self.field is other.field and self.covector == other.covector

    def __hash__(self) -> int:
        return hash((id(self.field), self.covector))

    def __repr__(self) -> str:
        a, b, c = self.covector
        return f"ProjLine(({a!r})x + ({b!r})y + ({c!r})z = 0)"


class ProjPoint:
    """A point in P^2, canonical coordinates with first nonzero entry 1."""

    __slots__ = ("field", "coords")

    def __init__(self, field: NumberField, coords):
        self.field = field
        self.coords = _normalize(field, coords)

    def __eq__(self, other) -> bool:
        if not isinstance(other, ProjPoint):
            return NotImplemented
        return self.field is other.field and self.coords == other.coords

    def __hash__(self) -> int:
        return hash((id(self.field), self.coords))

    def __repr__(self) -> str:
        x, y, z = self.coords
        return f"ProjPoint([{x!r} : {y!r} : {z!r}])"


def _cross(u, v):
    return (
        u[1] * v[2] - u[2] * v[1],
        u[2] * v[0] - u[0] * v[2],
        u[0] * v[1] - u[1] * v[0],
    )


def intersect(l1: ProjLine, l2: ProjLine) -> ProjPoint:
    """The unique common point of two distinct lines."""
    if l1.field is not l2.field:
        raise FieldMismatch("lines from different fields")
    w = _cross(l1.covector, l2.covector)
    if all(c.is_zero() for c in w):
        raise IdenticalLines(f"{l1!r} and {l2!r} coincide")
    return ProjPoint(l1.field, w)


def line_through(p: ProjPoint, q: ProjPoint) -> ProjLine:
    """The unique line through two distinct points."""
    if p.field is not q.field:
        raise FieldMismatch("points from different fields")
    w = _cross(p.coords, q.coords)
    if all(c.is_zero() for c in w):
        raise IdenticalPoints(f"{p!r} and {q!r} coincide")
    return ProjLine(p.field, w)


class Arrangement:
    """An ordered list of at least three pairwise distinct lines, not a pencil."""

    __slots__ = ("field", "lines", "name")

    def __init__(self, field: NumberField, lines, name: str = ""):
        lines = tuple(lines)
        self.field = field
        self.lines = lines
        self.name = name
        if len(lines) < 3:
            raise ArrlinkError("an arrangement needs at least 3 lines")
        seen = set()
        for ln in lines:
            if not isinstance(ln, ProjLine) or ln.field is not field:
                raise FieldMismatch("line from a different field")
            if ln.covector in seen:
                raise DuplicateLine(f"repeated line {ln!r}")
            seen.add(ln.covector)
        common = intersect(lines[0], lines[1])
        if all(ln.contains(common) for ln in lines):
            raise PencilRejected("all lines pass through one point")

    @property
    def n(self) -> int:
        return len(self.lines)

    def singular_points(self) -> list[tuple[ProjPoint, tuple[int, ...]]]:
        """All intersection points with their supports (1-based line indices).

        Every unordered pair of lines lands in exactly one support; the list
        is sorted lexicographically by support.
        """
        by_point: dict[tuple, tuple[ProjPoint, set[int]]] = {}
        for i in range(self.n):
            for j in range(i + 1, self.n):
                p = intersect(self.lines[i], self.lines[j])
                entry = by_point.get(p.coords)
                if entry is None:
                    by_point[p.coords] = (p, {i + 1, j + 1})
                else:
                    entry[1].update((i + 1, j + 1))
        out = [(p, tuple(sorted(s))) for p, s in by_point.values()]
        out.sort(key=lambda t: t[1])
        return out

    def supports(self) -> list[tuple[int, ...]]:
        return [s for _, s in self.singular_points()]

    def __repr__(self) -> str:
        label = self.name or "unnamed"
        return f"Arrangement({label}, n={self.n})"


def _det3(m) -> FieldElement:
    return (
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
        - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    )


def _adjugate3(m):
    def cof(r, c):
        rs = [i for i in range(3) if i != r]
        cs = [j for j in range(3) if j != c]
        minor = m[rs[0]][cs[0]] * m[rs[1]][cs[1]] - m[rs[0]][cs[1]] * m[rs[1]][cs[0]]
        return minor if (r + c) % 2 == 0 else -minor

    # adj[i][j] = cofactor(j, i)
    return [[cof(j, i) for j in range(3)] for i in range(3)]


def apply_projectivity(matrix, arr: Arrangement) -> Arrangement:
    """Transform an arrangement by the point map Q -> M Q.

    A line covector u maps to u M^-1; the adjugate replaces the inverse
    since projective coordinates absorb the determinant factor.
    """
    field = arr.field
    m = [[x if isinstance(x, FieldElement) else field.from_rational(x) for x in row]
         for row in matrix]
    if len(m) != 3 or any(len(row) != 3 for row in m):
        raise ArrlinkError("projectivity needs a 3x3 matrix")
    if _det3(m).is_zero():
        raise SingularMatrix("projectivity matrix has zero determinant")
    adj = _adjugate3(m)
    new_lines = []
    for ln in arr.lines:
        u = ln.covector
        cov = [u[0] * adj[0][k] + u[1] * adj[1][k] + u[2] * adj[2][k] for k in range(3)]
        new_lines.append(ProjLine(field, cov))
    return Arrangement(field, new_lines, name=arr.name)


def apply_projectivity_point(matrix, p: ProjPoint) -> ProjPoint:
    field = p.field
    m = [[x if isinstance(x, FieldElement) else field.from_rational(x) for x in row]
         for row in matrix]
    coords = [
        m[k][0] * p.coords[0] + m[k][1] * p.coords[1] + m[k][2] * p.coords[2]
        for k in range(3)
    ]
    return ProjPoint(field, coords)


def galois_conjugate(sigma: GaloisAutomorphism, arr: Arrangement) -> Arrangement:
    """Apply a Galois automorphism to every coefficient."""
    if sigma.field is not arr.field:
        raise FieldMismatch("automorphism from a different field")
    new_lines = [
        ProjLine(arr.field, [sigma(c) for c in ln.covector]) for ln in arr.lines
    ]
    return Arrangement(arr.field, new_lines, name=arr.name)
