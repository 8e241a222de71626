"""Exact arithmetic in a number field Q(alpha) with a designated complex root.

Elements are coordinate vectors over the power basis 1, alpha, ...,
alpha^(d-1) with Fraction entries, reduced modulo the defining polynomial.
Only Galois extensions are accepted: the automorphism group is discovered
at creation time, and the restriction of complex conjugation is what makes
exact sign queries possible.  Re(a) = 0 iff a + conj(a) = 0 and
Im(a) = 0 iff a = conj(a) are decided exactly; nonzero signs are settled
by interval refinement around the designated root.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from math import comb, isqrt

from .errors import ArrlinkError
from .qinterval import (
    EnclosureError,
    Interval,
    Rect,
    certify_root,
    durand_kerner,
    eval_poly_rect,
    refine_root,
)


class ReducibleMinPoly(ArrlinkError):
    """The defining polynomial factors over Q."""


class AmbiguousRootHint(ArrlinkError):
    """The root hint does not isolate exactly one complex root."""


class NotGaloisExtension(ArrlinkError):
    """Some conjugate root is not expressible in the field."""


class DivisionByZero(ArrlinkError):
    """Division by the zero element."""


class FieldMismatch(ArrlinkError):
    """Operands belong to different fields."""


_DENOMINATOR_BOUND = 10**6
_ROOT_BITS = 200


def _trim(coeffs: list[Fraction]) -> list[Fraction]:
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs


def _poly_ext_gcd(
    a: list[Fraction], b: list[Fraction]
) -> tuple[list[Fraction], list[Fraction]]:
    """Return (g, u) with u*a = g (mod b) and g = gcd(a, b) over Q[x]."""
    r0, r1 = _trim(list(a)), _trim(list(b))
    u0, u1 = [Fraction(1)], []
    while r1:
        q = [Fraction(0)] * max(len(r0) - len(r1) + 1, 1)
        rem = list(r0)
        while rem and len(rem) >= len(r1):
            shift = len(rem) - len(r1)
            factor = rem[-1] / r1[-1]
            q[shift] += factor
            for i, c in enumerate(r1):
                rem[shift + i] -= factor * c
            _trim(rem)
        prod = [Fraction(0)] * (len(q) + len(u1))
        for i, qc in enumerate(q):
            if qc:
                for j, uc in enumerate(u1):
                    prod[i + j] += qc * uc
        new_u = list(u0) + [Fraction(0)] * max(0, len(prod) - len(u0))
        for i, pc in enumerate(prod):
            new_u[i] -= pc
        r0, r1 = r1, rem
        u0, u1 = u1, _trim(new_u)
    return r0, u0


def _divisors(n: int) -> list[int]:
    n = abs(n)
    out = set()
    for k in range(1, isqrt(n) + 1):
        if n % k == 0:
            out.add(k)
            out.add(n // k)
    return sorted(out)


def _divides_monic(factor: list[int], poly: list[int]) -> bool:
    rem = list(poly)
    while len(rem) >= len(factor):
        lead = rem[-1]
        shift = len(rem) - len(factor)
        for i, c in enumerate(factor):
            rem[shift + i] -= lead * c
        while rem and rem[-1] == 0:
            rem.pop()
        if not rem:
            return True
    return not rem


def _is_irreducible_monic(coeffs: tuple[int, ...]) -> bool:
    deg = len(coeffs) - 1
    if deg <= 1:
        return deg == 1
    if coeffs[0] == 0:
        return False
    poly = list(coeffs)
    for r in _divisors(coeffs[0]):
        for root in (r, -r):
            if sum(c * root**k for k, c in enumerate(poly)) == 0:
                return False
    norm = isqrt(sum(c * c for c in coeffs)) + 1
    for k in range(2, deg // 2 + 1):
        bound = max(comb(k, i) for i in range(k + 1)) * norm
        consts = [s * v for v in _divisors(coeffs[0]) for s in (1, -1)]
        for const in consts:
            for middle in itertools.product(range(-bound, bound + 1), repeat=k - 1):
                if _divides_monic([const, *middle, 1], poly):
                    return False
    return True


class FieldElement:
    """An element of a NumberField, in power-basis coordinates."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: "NumberField", coeffs: tuple[Fraction, ...]):
        self.field = field
        self.coeffs = coeffs

    def _check(self, other: "FieldElement") -> None:
        if self.field is not other.field:
            raise FieldMismatch("operands from different number fields")

    def _coerce(self, other) -> "FieldElement | None":
        if isinstance(other, FieldElement):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction)):
            return self.field.from_rational(other)
        return None

    def __add__(self, other) -> "FieldElement":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FieldElement(
            self.field, tuple(a + b for a, b in zip(self.coeffs, o.coeffs))
        )

    __radd__ = __add__

    def __sub__(self, other) -> "FieldElement":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FieldElement(
            self.field, tuple(a - b for a, b in zip(self.coeffs, o.coeffs))
        )

    def __rsub__(self, other) -> "FieldElement":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __neg__(self) -> "FieldElement":
        return FieldElement(self.field, tuple(-a for a in self.coeffs))

    def __mul__(self, other) -> "FieldElement":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.field._mul(self, o)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "FieldElement":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other) -> "FieldElement":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, exponent: int) -> "FieldElement":
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = self.field.one
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def inverse(self) -> "FieldElement":
        if self.is_zero():
            raise DivisionByZero("inverse of zero")
        g, u = _poly_ext_gcd(_trim(list(self.coeffs)), self.field._min_frac)
        if len(g) != 1:
            raise DivisionByZero("element is a zero divisor")  # unreachable: irreducible
        scaled = [c / g[0] for c in u]
        return self.field.element(scaled)

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def __bool__(self) -> bool:
        return not self.is_zero()

    def conjugate(self) -> "FieldElement":
        return self.field.conjugation(self)

    def sign_real(self) -> int:
        return self.field.sign(self, "re")

    def sign_imag(self) -> int:
        return self.field.sign(self, "im")

    def __eq__(self, other) -> bool:
        if isinstance(other, FieldElement):
            return self.field is other.field and self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self == self.field.from_rational(other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash((id(self.field), self.coeffs))

    def __repr__(self) -> str:
        terms = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if k == 0:
                terms.append(str(c))
            else:
                mono = "a" if k == 1 else f"a^{k}"
                terms.append(mono if c == 1 else f"{c}*{mono}")
        return " + ".join(terms) if terms else "0"


class GaloisAutomorphism:
    """A field automorphism, stored by the image of the generator."""

    __slots__ = ("field", "image", "_matrix")

    def __init__(self, field: "NumberField", image: FieldElement):
        self.field = field
        self.image = image
        self._matrix: list[tuple[Fraction, ...]] | None = None

    def _rows(self) -> list[tuple[Fraction, ...]]:
        if self._matrix is None:
            power = self.field.one
            rows = []
            for _ in range(self.field.degree):
                rows.append(power.coeffs)
                power = power * self.image
            self._matrix = rows
        return self._matrix

    def __call__(self, elem: FieldElement) -> FieldElement:
        if elem.field is not self.field:
            raise FieldMismatch("element from a different field")
        acc = [Fraction(0)] * self.field.degree
        for a, row in zip(elem.coeffs, self._rows()):
            if a:
                for i, r in enumerate(row):
                    acc[i] += a * r
        return FieldElement(self.field, tuple(acc))

    def compose(self, other: "GaloisAutomorphism") -> "GaloisAutomorphism":
        """self after other: x -> self(other(x))."""
        return GaloisAutomorphism(self.field, self(other.image))

    def is_identity(self) -> bool:
        return self.image == self.field.alpha

    def inverse(self) -> "GaloisAutomorphism":
        for sigma in self.field.automorphisms():
            if self.compose(sigma).is_identity():
                return sigma
        raise NotGaloisExtension("no inverse found")  # unreachable

    def __eq__(self, other) -> bool:
        if not isinstance(other, GaloisAutomorphism):
            return NotImplemented
        return self.field is other.field and self.image == other.image

    def __hash__(self) -> int:
        return hash((id(self.field), self.image.coeffs))

    def __repr__(self) -> str:
        return f"GaloisAutomorphism(a -> {self.image!r})"


_FIELDS: dict[tuple, "NumberField"] = {}


class NumberField:
    """Q(alpha) for a monic irreducible integer polynomial, Galois over Q."""

    def __init__(self, *, _token=None):
        if _token is not _FIELDS:
            raise ArrlinkError("use NumberField.create")

    @classmethod
    def create(
        cls,
        min_poly,
        root_hint: tuple = (0, 0),
    ) -> "NumberField":
        """Build (or fetch from cache) the field for min_poly and root hint.

        min_poly lists integer coefficients from the constant term up and
        must be monic and irreducible.  root_hint = (re, im) must lie within
        1e-3 of exactly one complex root, which becomes the designated
        embedding for all sign queries.
        """
        poly = tuple(int(c) for c in min_poly)
        hint_re, hint_im = Fraction(root_hint[0]), Fraction(root_hint[1])
        key = (poly, hint_re, hint_im)
        if key in _FIELDS:
            return _FIELDS[key]
        if len(poly) < 2 or poly[-1] != 1:
            raise ReducibleMinPoly("defining polynomial must be monic of degree >= 1")
        if not _is_irreducible_monic(poly):
            raise ReducibleMinPoly(f"{list(poly)} factors over Q")
        self = cls(_token=_FIELDS)
        self.min_poly = poly
        self.degree = len(poly) - 1
        self._min_frac = [Fraction(c) for c in poly]
        self._build_reduction_rows()
        self.zero = FieldElement(self, (Fraction(0),) * self.degree)
        self.one = self.from_rational(1)
        if self.degree == 1:
            root = Fraction(-poly[0])
            self.alpha = self.from_rational(root)
            self._box = Rect.exact(root)
            self._box_bits = 10**9
            self._root_boxes = [self._box]
            self._designated = 0
            self._automorphisms = [GaloisAutomorphism(self, self.alpha)]
            self.conjugation = self._automorphisms[0]
        else:
            self.alpha = self.element([0, 1])
            self._isolate_roots(hint_re, hint_im)
            self._discover_automorphisms()
        _FIELDS[key] = self
        return self

    # -- construction helpers ------------------------------------------------

    def _build_reduction_rows(self) -> None:
        d = self.degree
        rows = []
        current = [-c for c in self._min_frac[:-1]]  # alpha^d
        for _ in range(d - 1):
            rows.append(tuple(current))
            overflow = current[-1]
            current = [Fraction(0)] + current[:-1]
            if overflow:
                current = [c + overflow * r for c, r in zip(current, rows[0])]
        rows.append(tuple(current))
        self._reduction = rows  # alpha^(d+k) for k = 0..d-2

    def _isolate_roots(self, hint_re: Fraction, hint_im: Fraction) -> None:
        seeds = durand_kerner(self.min_poly)
        for i, a in enumerate(seeds):
            for b in seeds[i + 1 :]:
                if abs(a - b) < 1e-6:
                    raise EnclosureError("root seeds not separated")
        hint = complex(hint_re, hint_im)
        near = [i for i, r in enumerate(seeds) if abs(r - hint) < 1e-3]
        if len(near) != 1:
            raise AmbiguousRootHint(
                f"hint {hint} matches {len(near)} roots of {list(self.min_poly)}"
            )
        boxes = [
            refine_root(self._min_frac, certify_root(self._min_frac, s), _ROOT_BITS)
            for s in seeds
        ]
        self._root_boxes = boxes
        self._designated = near[0]
        self._box = boxes[near[0]]
        self._box_bits = _ROOT_BITS

    def _discover_automorphisms(self) -> None:
        d = self.degree
        boxes = self._root_boxes
        mids = [complex(b.mid[0], b.mid[1]) for b in boxes]
        i0 = self._designated
        found: dict[int, FieldElement] = {i0: self.alpha}
        others = [j for j in range(d) if j != i0]
        for j in others:
            image = self._conjugate_image(j, mids, boxes)
            if image is None:
                raise NotGaloisExtension(
                    f"root {mids[j]} is not a polynomial in the designated root"
                )
            found[j] = image
        autos = [GaloisAutomorphism(self, found[j]) for j in range(d)]
        images = {a.image for a in autos}
        for a in autos:
            for b in autos:
                if a.compose(b).image not in images:
                    raise NotGaloisExtension("automorphisms not closed under composition")
        autos.sort(key=lambda a: (not a.is_identity(), a.image.coeffs))
        self._automorphisms = autos
        self.conjugation = self._find_conjugation()

    def _conjugate_image(self, j, mids, boxes) -> FieldElement | None:
        d = self.degree
        i0 = self._designated
        rest = [i for i in range(d) if i != i0]
        for tail in itertools.permutations([k for k in range(d) if k != j]):
            tau = {i0: j}
            tau.update(zip(rest, tail))
            coeffs = self._float_lagrange(mids, tau)
            if coeffs is None:
                continue
            candidate = self._rect_lagrange(boxes, tau)
            if candidate is None:
                continue
            if self._verify_automorphism(candidate, boxes[j]):
                return candidate
        return None

    def _float_lagrange(self, mids, tau) -> list[complex] | None:
        d = self.degree
        coeffs = [0j] * d
        for i in range(d):
            num = [1 + 0j]
            denom = 1 + 0j
            for k in range(d):
                if k == i:
                    continue
                nxt = [0j] * (len(num) + 1)
                for t, c in enumerate(num):
                    nxt[t + 1] += c
                    nxt[t] -= c * mids[k]
                num = nxt
                denom *= mids[i] - mids[k]
            scale = mids[tau[i]] / denom
            for t in range(d):
                coeffs[t] += num[t] * scale
        for c in coeffs:
            if abs(c.imag) > 1e-7:
                return None
            approx = Fraction(c.real).limit_denominator(_DENOMINATOR_BOUND)
            if abs(approx - Fraction(c.real)) > Fraction(1, 10**8):
                return None
        return coeffs

    def _rect_lagrange(self, boxes, tau) -> FieldElement | None:
        d = self.degree
        coeffs = [Rect.exact(0) for _ in range(d)]
        for i in range(d):
            num = [Rect.exact(1)]
            denom = Rect.exact(1)
            for k in range(d):
                if k == i:
                    continue
                nxt = [Rect.exact(0) for _ in range(len(num) + 1)]
                for t, c in enumerate(num):
                    nxt[t + 1] = nxt[t + 1] + c
                    nxt[t] = nxt[t] - c * boxes[k]
                num = nxt
                denom = denom * (boxes[i] - boxes[k])
            scale = boxes[tau[i]] / denom
            for t in range(d):
                coeffs[t] = coeffs[t] + num[t] * scale
        out = []
        for c in coeffs:
            if not c.im.contains_zero():
                return None
            q = _simplest_in(c.re.lo, c.re.hi)
            if q.denominator > _DENOMINATOR_BOUND:
                return None
            out.append(q)
        return self.element(out)

    def _verify_automorphism(self, image: FieldElement, target: Rect) -> bool:
        acc = self.zero
        for c in reversed(self._min_frac):
            acc = acc * image + self.from_rational(c)
        if not acc.is_zero():
            return False
        value = eval_poly_rect(image.coeffs, self._box)
        try:
            value.intersect(target)
        except EnclosureError:
            return False
        return True

    def _find_conjugation(self) -> GaloisAutomorphism:
        target = self._box.conj()
        for sigma in self._automorphisms:
            value = eval_poly_rect(sigma.image.coeffs, self._box)
            try:
                value.intersect(target)
            except EnclosureError:
                continue
            if not sigma.compose(sigma).is_identity():
                raise NotGaloisExtension("conjugation is not an involution")
            return sigma
        raise NotGaloisExtension("no automorphism matches complex conjugation")

    # -- element constructors --------------------------------------------------

    def element(self, coeffs) -> FieldElement:
        vals = [Fraction(c) for c in coeffs]
        if len(vals) > self.degree:
            raise ArrlinkError("coordinate vector longer than field degree")
        vals += [Fraction(0)] * (self.degree - len(vals))
        return FieldElement(self, tuple(vals))

    def from_rational(self, q) -> FieldElement:
        vals = [Fraction(q)] + [Fraction(0)] * (self.degree - 1)
        return FieldElement(self, tuple(vals))

    def _mul(self, a: FieldElement, b: FieldElement) -> FieldElement:
        d = self.degree
        conv = [Fraction(0)] * (2 * d - 1)
        for i, x in enumerate(a.coeffs):
            if x == 0:
                continue
            for j, y in enumerate(b.coeffs):
                if y:
                    conv[i + j] += x * y
        out = conv[:d]
        for k in range(d, 2 * d - 1):
            c = conv[k]
            if c:
                row = self._reduction[k - d]
                for i, r in enumerate(row):
                    if r:
                        out[i] += c * r
        return FieldElement(self, tuple(out))

    # -- automorphisms and signs ------------------------------------------------

    def automorphisms(self) -> list[GaloisAutomorphism]:
        """All field automorphisms; identity first, order equals the degree."""
        return list(self._automorphisms)

    def root_box(self, bits: int) -> Rect:
        if self._box_bits < bits:
            self._box = refine_root(self._min_frac, self._box, bits)
            self._box_bits = bits
        return self._box

    def sign(self, elem: FieldElement, part: str) -> int:
        """Sign (-1, 0, +1) of the real or imaginary part of an element.

        Zero is decided exactly through the conjugation automorphism; the
        nonzero cases terminate because the enclosure width halves until the
        evaluated rectangle excludes zero.
        """
        if elem.field is not self:
            raise FieldMismatch("element from a different field")
        conj = self.conjugation(elem)
        if part == "re":
            if (elem + conj).is_zero():
                return 0
        elif part == "im":
            if (elem - conj).is_zero():
                return 0
        else:
            raise ArrlinkError(f"unknown part {part!r}")
        bits = 64
        while True:
            box = self.root_box(bits)
            value = eval_poly_rect(elem.coeffs, box)
            interval = value.re if part == "re" else value.im
            s = interval.sign()
            if s is not None:
                return s
            bits *= 2
            if bits > 1 << 16:
                raise EnclosureError("sign refinement did not terminate")

    def __repr__(self) -> str:
        return f"NumberField({list(self.min_poly)})"


def _simplest_in(lo: Fraction, hi: Fraction) -> Fraction:
    """The rational with smallest denominator in [lo, hi]."""
    if lo > hi:
        raise ArrlinkError("empty interval")
    if lo == hi:
        return lo
    floor_hi = hi.__floor__()
    if lo <= 0 <= hi:
        return Fraction(0)
    if lo > 0:
        ceil_lo = -((-lo).__floor__())
        if ceil_lo <= hi:
            return Fraction(ceil_lo)
        a = lo.__floor__()
        return a + 1 / _simplest_in(1 / (hi - a), 1 / (lo - a))
    return -_simplest_in(-hi, -lo)
