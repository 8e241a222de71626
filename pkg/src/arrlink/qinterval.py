"""Exact interval arithmetic over the rationals, with complex rectangles.

Signs of algebraic numbers are decided by evaluating polynomials on a
certified rectangle that encloses a chosen root of the defining
polynomial, shrinking the rectangle (interval Newton) until zero is
excluded.  Endpoints are Fractions throughout, so the enclosures are
rigorous by construction; floating point only seeds the root isolator.
"""

from __future__ import annotations

import cmath
from fractions import Fraction
from typing import Callable, Sequence

from .errors import ArrlinkError


class EnclosureError(ArrlinkError):
    """A certified root enclosure could not be established or refined."""


class Interval:
    """Closed interval [lo, hi] with rational endpoints."""

    __slots__ = ("lo", "hi")

    def __init__(self, lo: Fraction, hi: Fraction):
        if lo > hi:
            raise EnclosureError("empty interval")
        self.lo = lo
        self.hi = hi

    @classmethod
    def exact(cls, value: Fraction | int) -> "Interval":
        q = Fraction(value)
        return cls(q, q)

    def __repr__(self) -> str:
        return f"Interval({self.lo}, {self.hi})"

    def __add__(self, other: "Interval") -> "Interval":
        return Interval(self.lo + other.lo, self.hi + other.hi)

    def __sub__(self, other: "Interval") -> "Interval":
        return Interval(self.lo - other.hi, self.hi - other.lo)

    def __neg__(self) -> "Interval":
        return Interval(-self.hi, -self.lo)

    def __mul__(self, other: "Interval") -> "Interval":
        products = (
            self.lo * other.lo,
            self.lo * other.hi,
            self.hi * other.lo,
            self.hi * other.hi,
        )
        return Interval(min(products), max(products))

    def square(self) -> "Interval":
        # Tighter than self * self when the interval straddles zero.
        if self.lo <= 0 <= self.hi:
            return Interval(Fraction(0), max(self.lo * self.lo, self.hi * self.hi))
        lo, hi = self.lo * self.lo, self.hi * self.hi
        return Interval(min(lo, hi), max(lo, hi))

    def reciprocal(self) -> "Interval":
        if self.lo <= 0 <= self.hi:
            raise EnclosureError("reciprocal of interval containing zero")
        return Interval(1 / self.hi, 1 / self.lo)

    def scale(self, q: Fraction) -> "Interval":
        if q >= 0:
            return Interval(self.lo * q, self.hi * q)
        return Interval(self.hi * q, self.lo * q)

    def contains(self, q: Fraction) -> bool:
        return self.lo <= q <= self.hi

    def contains_zero(self) -> bool:
        return self.lo <= 0 <= self.hi

    def intersect(self, other: "Interval") -> "Interval":
        return Interval(max(self.lo, other.lo), min(self.hi, other.hi))

    def inside(self, other: "Interval") -> bool:
        return other.lo < self.lo and self.hi < other.hi

    def sign(self) -> int | None:
        """+1 or -1 when zero is excluded, None when undecided."""
        if self.lo > 0:
            return 1
        if self.hi < 0:
            return -1
        return None

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def mid(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def round_outward(self, bits: int) -> "Interval":
        """Widen endpoints to denominator 2**bits; keeps arithmetic cheap."""
        scale = 1 << bits
        lo = Fraction((self.lo * scale).__floor__(), scale)
        hi = Fraction(-((-self.hi * scale).__floor__()), scale)
        return Interval(lo, hi)


class Rect:
    """Axis-aligned rectangle in the complex plane (rational endpoints)."""

    __slots__ = ("re", "im")

    def __init__(self, re: Interval, im: Interval):
        self.re = re
        self.im = im

    @classmethod
    def exact(cls, re: Fraction | int, im: Fraction | int = 0) -> "Rect":
        return cls(Interval.exact(re), Interval.exact(im))

    def __repr__(self) -> str:
        return f"Rect({self.re}, {self.im})"

    def __add__(self, other: "Rect") -> "Rect":
        return Rect(self.re + other.re, self.im + other.im)

    def __sub__(self, other: "Rect") -> "Rect":
        return Rect(self.re - other.re, self.im - other.im)

    def __mul__(self, other: "Rect") -> "Rect":
        return Rect(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    def conj(self) -> "Rect":
        return Rect(self.re, -self.im)

    def norm2(self) -> Interval:
        return self.re.square() + self.im.square()

    def __truediv__(self, other: "Rect") -> "Rect":
        inv = other.norm2().reciprocal()
        num = self * other.conj()
        return Rect(num.re * inv, num.im * inv)

    def scale(self, q: Fraction) -> "Rect":
        return Rect(self.re.scale(q), self.im.scale(q))

    def contains(self, re: Fraction, im: Fraction) -> bool:
        return self.re.contains(re) and self.im.contains(im)

    def intersect(self, other: "Rect") -> "Rect":
        return Rect(self.re.intersect(other.re), self.im.intersect(other.im))

    def inside(self, other: "Rect") -> bool:
        return self.re.inside(other.re) and self.im.inside(other.im)

    @property
    def width(self) -> Fraction:
        return max(self.re.width, self.im.width)

    @property
    def mid(self) -> tuple[Fraction, Fraction]:
        return self.re.mid, self.im.mid

    def round_outward(self, bits: int) -> "Rect":
        return Rect(self.re.round_outward(bits), self.im.round_outward(bits))


def eval_poly_rect(coeffs: Sequence[Fraction], z: Rect) -> Rect:
    """Horner evaluation of a rational-coefficient polynomial on a rectangle."""
    acc = Rect.exact(0)
    for c in reversed(coeffs):
        acc = acc * z + Rect.exact(c)
    return acc


def eval_poly_exact(
    coeffs: Sequence[Fraction], z: tuple[Fraction, Fraction]
) -> tuple[Fraction, Fraction]:
    re, im = Fraction(0), Fraction(0)
    zr, zi = z
    for c in reversed(coeffs):
        re, im = re * zr - im * zi + c, re * zi + im * zr
    return re, im


def derivative(coeffs: Sequence[Fraction]) -> list[Fraction]:
    return [k * c for k, c in enumerate(coeffs)][1:]


def durand_kerner(coeffs: Sequence[int | Fraction]) -> list[complex]:
    """All complex roots of a polynomial, as floats (seed values only)."""
    deg = len(coeffs) - 1
    if deg < 1:
        return []
    lead = complex(coeffs[-1])
    monic = [complex(c) / lead for c in coeffs]
    if deg == 1:
        return [-monic[0]]
    bound = 1.0 + max(abs(c) for c in monic[:-1])

    def p(z: complex) -> complex:
        acc = 0j
        for c in reversed(monic):
            acc = acc * z + c
        return acc

    roots = [bound * cmath.exp(2j * cmath.pi * k / deg + 0.4j) for k in range(deg)]
    for _ in range(500):
        shift = 0.0
        for i in range(deg):
            denom = 1 + 0j
            for j in range(deg):
                if j != i:
                    denom *= roots[i] - roots[j]
            delta = p(roots[i]) / denom
            roots[i] -= delta
            shift = max(shift, abs(delta))
        if shift < 1e-14:
            break
    # A few Newton polishing steps tighten the seeds for the certifier.
    dmonic = [k * c for k, c in enumerate(monic)][1:]

    def dp(z: complex) -> complex:
        acc = 0j
        for c in reversed(dmonic):
            acc = acc * z + c
        return acc

    for i in range(deg):
        for _ in range(3):
            d = dp(roots[i])
            if d != 0:
                roots[i] -= p(roots[i]) / d
    return roots


def certify_root(
    coeffs: Sequence[Fraction], seed: complex, radius: Fraction = Fraction(1, 10**6)
) -> Rect:
    """Certified rectangle around a simple root near the float seed.

    Runs one interval Newton step N(B) = mid(B) - p(mid)/p'(B); N(B) inside B
    proves B contains exactly one root, and the intersection keeps it.
    """
    dcoeffs = derivative(coeffs)
    r = radius
    for _ in range(8):
        sr, si = Fraction(seed.real), Fraction(seed.imag)
        box = Rect(Interval(sr - r, sr + r), Interval(si - r, si + r))
        try:
            step = _newton_step(coeffs, dcoeffs, box)
        except EnclosureError:
            r = r / 16
            continue
        if step.inside(box):
            return step.round_outward(80)
        r = r * 16
    raise EnclosureError("could not certify a root enclosure near %r" % (seed,))


def _newton_step(
    coeffs: Sequence[Fraction], dcoeffs: Sequence[Fraction], box: Rect
) -> Rect:
    mr, mi = box.mid
    fr, fi = eval_poly_exact(coeffs, (mr, mi))
    quotient = Rect.exact(fr, fi) / eval_poly_rect(dcoeffs, box)
    return Rect.exact(mr, mi) - quotient


def refine_root(coeffs: Sequence[Fraction], box: Rect, target_bits: int) -> Rect:
    """Shrink a certified enclosure until its width is below 2**-target_bits."""
    dcoeffs = derivative(coeffs)
    threshold = Fraction(1, 1 << target_bits)
    while box.width > threshold:
        step = _newton_step(coeffs, dcoeffs, box)
        nxt = step.intersect(box)
        if nxt.width >= box.width:
            raise EnclosureError("interval Newton stalled")
        box = nxt.round_outward(target_bits + 32)
    return box
