from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from raymate import angles as ang
from raymate.errors import InvalidInputError, NotPeriodicError


# --- frozen oracle values ---------------------------------------------------


def test_periods_and_orbits():
    assert ang.period(2, F(1, 7)) == 3
    assert ang.period(2, F(0)) == 1
    assert ang.orbit(2, F(86, 255)).iterates[:3] == (F(86, 255), F(172, 255), F(89, 255))
    assert ang.orbit(2, F(86, 255)).period == 8


def test_non_periodic_rejected():
    with pytest.raises(NotPeriodicError):
        ang.period(2, F(1, 4))


def test_layers():
    assert ang.layer(2, 3) == [F(k, 7) for k in range(1, 7)]
    assert len(ang.layer(2, 4)) == 12
    assert len(ang.layer(3, 2)) == 6


def test_rotation_numbers():
    assert ang.rotation_number(2, F(1, 7)) == F(1, 3)
    assert ang.rotation_number(3, F(1, 8)) == F(1, 2)
    assert ang.rotation_number(2, F(1, 15)) == F(1, 4)
    assert ang.rotation_number(2, F(7, 15)) == F(3, 4)
    assert ang.rotation_number(2, F(1, 5)) is None
    assert ang.two_rotation_number(F(86, 255)) == F(1, 4)


def test_arc_index():
    assert ang.arc_index(3, F(1, 8)) == 0
    assert ang.arc_index(3, F(5, 8)) == 1
    assert ang.arc_index(3, F(1, 2)) is None


def test_words_and_tuning():
    assert ang.binary_word(F(1, 7), 3) == "001"
    assert ang.word_angle("001") == F(1, 7)
    assert ang.tune((F(1, 3), F(2, 3)), (F(1, 7), F(2, 7))) == (F(22, 63), F(25, 63))


def test_crossing():
    assert ang.circular_cross((F(0), F(1, 2)), (F(1, 4), F(3, 4)))
    assert not ang.circular_cross((F(0), F(1, 4)), (F(1, 2), F(3, 4)))


def test_parse_and_format():
    assert ang.parse_angle("9/7") == F(2, 7)
    assert ang.format_angle(F(2, 7)) == "2/7"
    for bad in ("1/0", "x", "1/2/3"):
        with pytest.raises(InvalidInputError):
            ang.parse_angle(bad)


def test_rotation_orbits():
    (orb,) = ang.enumerate_rotation_orbits(2, F(1, 3))
    assert orb.iterates == (F(1, 7), F(2, 7), F(4, 7))


# --- properties ----------------------------------------------------------------

degrees = st.integers(2, 4)


@st.composite
def periodic_angles(draw, max_period=8):
    d = draw(degrees)
    r = draw(st.integers(1, max_period if d == 2 else 5))
    m = d**r - 1
    a = draw(st.integers(0, m - 1))
    return d, F(a, m)


@settings(max_examples=200, deadline=None)
@given(periodic_angles())
def test_period_divides_layer_exponent(data):
    d, t = data
    n = ang.period(d, t)
    assert ang.times(d, t, n) == t
    assert all(ang.times(d, t, k) != t for k in range(1, n))
    assert t in ang.layer(d, n)


@settings(max_examples=200, deadline=None)
@given(periodic_angles())
def test_negation_preserves_period(data):
    d, t = data
    assert ang.period(d, ang.negate(t)) == ang.period(d, t)
    assert ang.negate(ang.negate(t)) == t


@settings(max_examples=200, deadline=None)
@given(periodic_angles())
def test_orbit_is_invariant(data):
    d, t = data
    orb = ang.orbit(d, t)
    assert {ang.times(d, x) for x in orb} == set(orb.iterates)


@settings(max_examples=200, deadline=None)
@given(periodic_angles())
def test_rotation_number_is_orbit_invariant(data):
    d, t = data
    rho = ang.rotation_number(d, t)
    assert ang.rotation_number(d, ang.times(d, t)) == rho
    if rho is not None:
        assert rho.denominator == ang.period(d, t) or rho == 0


@settings(max_examples=200, deadline=None)
@given(periodic_angles(), periodic_angles())
def test_crossing_is_symmetric(a, b):
    x, y = a[1], b[1]
    leaf1, leaf2 = (x, ang.negate(x)), (y, F(1, 3))
    assert ang.circular_cross(leaf1, leaf2) == ang.circular_cross(leaf2, leaf1)
    assert ang.circular_cross(leaf1, leaf2) == ang.circular_cross(leaf1[::-1], leaf2)
