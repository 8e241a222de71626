"""Field arithmetic, automorphism discovery, and certified signs."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from arrlink.numberfield import (
    AmbiguousRootHint,
    DivisionByZero,
    FieldMismatch,
    NotGaloisExtension,
    NumberField,
    ReducibleMinPoly,
    _is_irreducible_monic,
    _simplest_in,
)

ZETA5 = [1, 1, 1, 1, 1]
ZETA5_HINT = (Fraction(309, 1000), Fraction(951, 1000))
OMEGA = [1, 1, 1]
OMEGA_HINT = (Fraction(-1, 2), Fraction(866, 1000))
ZETA7 = [1, 1, 1, 1, 1, 1, 1]
ZETA7_HINT = (Fraction(62349, 100000), Fraction(78183, 100000))


@pytest.fixture(scope="module")
def q5():
    return NumberField.create(ZETA5, ZETA5_HINT)


@pytest.fixture(scope="module")
def qw():
    return NumberField.create(OMEGA, OMEGA_HINT)


@pytest.fixture(scope="module")
def rationals():
    return NumberField.create([0, 1], (0, 0))


def test_cache_returns_same_object(q5):
    assert NumberField.create(ZETA5, ZETA5_HINT) is q5


def test_reducible_rejected():
    with pytest.raises(ReducibleMinPoly):
        NumberField.create([-1, 0, 1], (1, 0))  # Z^2 - 1
    with pytest.raises(ReducibleMinPoly):
        NumberField.create([1, 2, 1], (-1, 0))  # (Z + 1)^2
    with pytest.raises(ReducibleMinPoly):
        NumberField.create([0, 1, 1], (0, 0))  # Z(Z + 1)


def test_irreducibility_helper():
    assert _is_irreducible_monic((1, 1, 1, 1, 1))
    assert _is_irreducible_monic((1, 3, 4, 2, 1))
    assert _is_irreducible_monic((1, -1, 1, -1, 1))
    assert _is_irreducible_monic((1, -3, 4, -2, 1))
    assert not _is_irreducible_monic((1, 2, 3, 2, 1))  # (Z^2+Z+1)^2
    assert not _is_irreducible_monic((2, 3, 1))  # (Z+1)(Z+2)


def test_ambiguous_hint_rejected():
    with pytest.raises(AmbiguousRootHint):
        NumberField.create(ZETA5, (10, 10))
    with pytest.raises(AmbiguousRootHint):
        NumberField.create([1, 1, 1, 1, 1], (0, 0))


def test_non_galois_rejected():
    # Z^3 - 2 has one real and two complex roots; Q(cbrt 2) is not normal.
    with pytest.raises(NotGaloisExtension):
        NumberField.create([-2, 0, 0, 1], (Fraction(63, 50), 0))


def test_zeta5_basic_identities(q5):
    z = q5.alpha
    assert z**5 == 1
    assert z * z**4 == 1
    assert z + z**2 + z**3 + z**4 == -1
    assert (z**2) ** 3 == z


def test_inverse_by_multiplication(q5):
    z = q5.alpha
    w = 1 + z
    assert w * w.inverse() == 1
    # oracle: (1+z)(-(z+z^3)) = -(z+z^2+z^3+z^4) = 1 for a fifth root of unity
    assert w.inverse() == -(z + z**3)
    assert (w * w * w).inverse() * w * w * w == 1


def test_division_by_zero(q5):
    with pytest.raises(DivisionByZero):
        q5.zero.inverse()
    with pytest.raises(DivisionByZero):
        q5.one / q5.zero


def test_field_mismatch(q5, qw):
    with pytest.raises(FieldMismatch):
        q5.alpha + qw.alpha


def test_automorphism_count(q5, qw, rationals):
    assert len(q5.automorphisms()) == 4
    assert len(qw.automorphisms()) == 2
    assert len(rationals.automorphisms()) == 1


def test_automorphisms_are_power_maps(q5):
    z = q5.alpha
    images = {tuple(s.image.coeffs) for s in q5.automorphisms()}
    expected = {tuple((z**k).coeffs) for k in (1, 2, 3, 4)}
    assert images == expected


def test_automorphism_group_structure(q5):
    autos = q5.automorphisms()
    assert autos[0].is_identity()
    for s in autos:
        assert s.compose(s.inverse()).is_identity()
    # Gal(Q(zeta5)/Q) is cyclic of order 4: some element has order 4
    orders = []
    for s in autos:
        t, k = s, 1
        while not t.is_identity():
            t, k = t.compose(s), k + 1
        orders.append(k)
    assert sorted(orders) == [1, 2, 4, 4]


def test_conjugation_involution(q5, qw):
    for field in (q5, qw):
        conj = field.conjugation
        assert conj.compose(conj).is_identity()
        assert conj(field.alpha) * field.alpha == 1  # |alpha| = 1 here


def test_conjugation_matches_embedding(q5):
    # designated root is zeta5 = e^(2 pi i / 5); conjugation sends it to zeta5^4
    z = q5.alpha
    assert q5.conjugation(z) == z**4


def test_sign_queries(q5):
    z = q5.alpha
    # Re(zeta5) = cos 72 deg > 0, Im > 0
    assert z.sign_real() == 1
    assert z.sign_imag() == 1
    assert (z**2).sign_real() == -1  # cos 144 < 0
    assert (z**3).sign_imag() == -1
    # zeta + conj(zeta) is real: 2 cos 72
    assert (z + z**4).sign_imag() == 0
    assert (z + z**4).sign_real() == 1
    assert (z - z**4).sign_real() == 0
    assert q5.zero.sign_real() == 0 and q5.zero.sign_imag() == 0
    assert (z + z**2 + z**3 + z**4 + 1).sign_real() == 0


def test_sign_of_tiny_rational(q5):
    small = q5.from_rational(Fraction(1, 10**40))
    assert small.sign_real() == 1
    assert (-small).sign_real() == -1
    assert small.sign_imag() == 0


def test_rationals_field(rationals):
    two = rationals.from_rational(2)
    assert (two / 4) == Fraction(1, 2)
    assert two.sign_real() == 1
    assert two.sign_imag() == 0
    assert rationals.conjugation(two) == two


def test_zeta7_field():
    q7 = NumberField.create(ZETA7, ZETA7_HINT)
    z = q7.alpha
    assert z**7 == 1
    assert len(q7.automorphisms()) == 6
    assert q7.conjugation(z) == z**6


def test_element_repr(q5):
    z = q5.alpha
    assert repr(q5.zero) == "0"
    assert "a" in repr(z)


def test_simplest_in():
    f = Fraction
    assert _simplest_in(f(1, 3), f(1, 2)) == f(1, 2)
    assert _simplest_in(f(-1, 2), f(1, 3)) == 0
    assert _simplest_in(f(7, 2), f(19, 5)) == f(7, 2)
    assert _simplest_in(f(2), f(2)) == 2
    assert _simplest_in(f(-5, 3), f(-3, 2)) == f(-3, 2)
    assert _simplest_in(f(31, 10), f(32, 10)) == f(16, 5)
    # denominator minimality on a randomish sample of tight intervals
    for num in range(-25, 26):
        lo, hi = f(num, 17), f(num, 17) + f(1, 40)
        best = _simplest_in(lo, hi)
        assert lo <= best <= hi
        for den in range(1, best.denominator):
            k_lo = -((-lo * den).__floor__())
            assert f(k_lo, den) > hi or f(k_lo, den) < lo


coeff = st.integers(min_value=-20, max_value=20).map(Fraction)
vec5 = st.tuples(coeff, coeff, coeff, coeff)


@settings(max_examples=60, deadline=None)
@given(vec5, vec5)
def test_field_axioms_addition_multiplication(u, v):
    q5 = NumberField.create(ZETA5, ZETA5_HINT)
    a, b = q5.element(list(u)), q5.element(list(v))
    assert a + b == b + a
    assert a * b == b * a
    assert a * (b + 1) == a * b + a
    assert (a - b) + b == a


@settings(max_examples=40, deadline=None)
@given(vec5)
def test_inverse_roundtrip(u):
    q5 = NumberField.create(ZETA5, ZETA5_HINT)
    a = q5.element(list(u))
    if a.is_zero():
        with pytest.raises(DivisionByZero):
            a.inverse()
    else:
        assert a * a.inverse() == 1


@settings(max_examples=40, deadline=None)
@given(vec5)
def test_automorphisms_are_ring_maps(u):
    q5 = NumberField.create(ZETA5, ZETA5_HINT)
    a = q5.element(list(u))
    b = q5.alpha + 1
    for sigma in q5.automorphisms():
        assert sigma(a * b) == sigma(a) * sigma(b)
        assert sigma(a + b) == sigma(a) + sigma(b)


@settings(max_examples=30, deadline=None)
@given(vec5)
def test_sign_consistency_with_floats(u):
    q5 = NumberField.create(ZETA5, ZETA5_HINT)
    a = q5.element(list(u))
    import cmath

    zeta = cmath.exp(2j * cmath.pi / 5)
    approx = sum(complex(c) * zeta**k for k, c in enumerate(a.coeffs))
    if abs(approx.real) > 1e-9:
        assert a.sign_real() == (1 if approx.real > 0 else -1)
    if abs(approx.imag) > 1e-9:
        assert a.sign_imag() == (1 if approx.imag > 0 else -1)
