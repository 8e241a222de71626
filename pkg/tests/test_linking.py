"""Loop linking numbers: both computation routes, orbits, and verdicts."""

import pytest
from hypothesis import given
from hypothesis import strategies as st

from arrlink.braid import MeridianSum, WiringDiagram
from arrlink.combinatorics import comb_automorphisms, comb_from_arrangement
from arrlink.datasets import (
    COMB_C,
    W_M1_EVENTS,
    W_M1_STRANDS,
    W_M3_EVENTS,
    W_M3_STRANDS,
    arrangement_m,
    arrangement_m_ext,
)
from arrlink.errors import ArrlinkError
from arrlink.linking import (
    InvalidTensor,
    LLNValue,
    NotAnAutomorphism,
    choose_frame,
    compare,
    full_lln,
    lln,
    lln_orbit,
    phi,
    ulk_cov,
)
from arrlink.tlg import Tensor, edges_of, tlg_compute

IDENTITY_10 = tuple(range(1, 11))


@pytest.fixture(scope="module")
def lam():
    return tlg_compute(COMB_C, 5)[0]


@pytest.fixture(scope="module")
def m1():
    return arrangement_m(1)


def wiring_m1():
    return WiringDiagram(W_M1_STRANDS, W_M1_EVENTS, COMB_C)


# -- reference values ----------------------------------------------------------


def test_m1_value_by_projection(lam, m1):
    assert int(lln(m1, lam, method="cov", seed=1)) == 2


def test_m1_value_by_wiring(lam, m1):
    v = lln(m1, lam, method="wiring", wiring=wiring_m1())
    assert int(v) == 2


def test_m3_both_routes_agree(lam):
    m3 = arrangement_m(3)
    w = WiringDiagram(W_M3_STRANDS, W_M3_EVENTS, COMB_C)
    assert int(lln(m3, lam, method="wiring", wiring=w)) == 1
    assert int(lln(m3, lam, method="cov", seed=1)) == 1


def test_family_values_are_twice_the_index(lam):
    # conjugating the field generator multiplies the invariant by the
    # exponent, so the four values are 2k mod 5
    for k in (2, 4):
        assert int(lln(arrangement_m(k), lam, seed=1)) == 2 * k % 5


def test_conjugate_indices_give_opposite_values(lam):
    v1 = int(lln(arrangement_m(1), lam, seed=2))
    v4 = int(lln(arrangement_m(4), lam, seed=2))
    assert (v1 + v4) % 5 == 0


def test_frame_independence(lam, m1):
    values = {int(lln(m1, lam, seed=s)) for s in (0, 1, 2)}
    assert values == {2}


# -- frames --------------------------------------------------------------------


def test_choose_frame_is_deterministic(m1):
    f1 = choose_frame(m1, seed=7)
    f2 = choose_frame(m1, seed=7)
    assert f1.chart == f2.chart
    assert f1.points == f2.points


def test_explicit_frame_matches_auto(lam, m1):
    frame = choose_frame(m1, seed=1)
    assert int(lln(m1, lam, frame=frame)) == int(lln(m1, lam, seed=1))


def test_phi_rejects_support_line(m1):
    frame = choose_frame(m1, seed=1)
    edge = ((5, 6, 7, 8), 5)
    with pytest.raises(ArrlinkError):
        phi(m1, frame, edge, 6)


def test_ulk_pairing_ignores_meridian_sum_shift(lam, m1):
    # characters sum to zero mod n, so the all-ones ambiguity of a
    # meridian sum never reaches the invariant
    frame = choose_frame(m1, seed=1)
    ones = MeridianSum(10, tuple([1] * 10))
    for edge in list(edges_of(COMB_C))[:6]:
        u = ulk_cov(m1, frame, edge)
        char = lam.values[edge]
        assert u.pair(char, 5) == (u + ones).pair(char, 5)


# -- orbits and the full invariant ---------------------------------------------


def test_orbit_identity_entry_is_the_plain_value(lam, m1):
    aut = comb_automorphisms(COMB_C)
    orbit = dict(lln_orbit(m1, lam, aut, method="wiring", wiring=wiring_m1()))
    assert int(orbit[IDENTITY_10]) == 2


def test_orbit_spans_all_nonzero_residues(lam, m1):
    aut = comb_automorphisms(COMB_C)
    orbit = lln_orbit(m1, lam, aut, method="wiring", wiring=wiring_m1())
    assert sorted(int(v) for _, v in orbit) == [1, 2, 3, 4]


def test_orbit_rejects_non_automorphism(lam, m1):
    swap_first_two = (2, 1) + tuple(range(3, 11))
    with pytest.raises(NotAnAutomorphism):
        lln_orbit(m1, lam, [swap_first_two])


def test_full_lln_of_symmetric_family_saturates(lam, m1):
    full = full_lln(m1, lam, method="wiring", wiring=wiring_m1())
    assert full == {1, 2, 3, 4}


def test_full_lln_of_rigid_extension_is_a_pair(lam):
    ext = arrangement_m_ext(1)
    comb = comb_from_arrangement(ext)
    assert comb_automorphisms(comb).order == 1
    lam_ext = tlg_compute(comb, 5)[0]
    assert full_lln(ext, lam_ext, seed=1) == {2, 3}


# -- comparison verdicts ---------------------------------------------------------


def test_rigid_extensions_have_distinct_complements():
    rep = compare(arrangement_m_ext(1), arrangement_m_ext(2), 5, seed=1)
    assert rep["verdict"] == "non-homeomorphic complements"
    assert rep["full_set_1"] == [[2, 3]]
    assert rep["full_set_2"] == [[1, 4]]


def test_mirror_pair_is_only_order_sensitive():
    rep = compare(arrangement_m_ext(1), arrangement_m_ext(4), 5, seed=1)
    assert rep["verdict"] == "ordered-oriented distinct"
    assert rep["full_set_1"] == rep["full_set_2"]


def test_arrangement_is_not_distinct_from_itself(lam, m1):
    rep = compare(m1, m1, 5, seed=1)
    assert rep["verdict"] == "inconclusive"
    assert rep["values_1"] == rep["values_2"]


# -- guards ----------------------------------------------------------------------


def test_wrong_combinatorics_tensor_is_rejected(m1):
    ext = comb_from_arrangement(arrangement_m_ext(1))
    with pytest.raises(InvalidTensor):
        lln(m1, tlg_compute(ext, 5)[0])


def test_tampered_tensor_is_rejected(lam, m1):
    edge = next(iter(lam.values))
    broken = dict(lam.values)
    broken[edge] = tuple([1] * 10)
    with pytest.raises(InvalidTensor):
        lln(m1, Tensor(COMB_C, 5, broken))


def test_wiring_method_needs_a_diagram(lam, m1):
    with pytest.raises(ArrlinkError):
        lln(m1, lam, method="wiring")


@given(st.integers(min_value=-50, max_value=50))
def test_value_normalization(v):
    assert 0 <= LLNValue(5, v).value < 5
    assert int(LLNValue(5, v)) == v % 5
