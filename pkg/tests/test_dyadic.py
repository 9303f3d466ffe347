from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from amplitude.dyadic import ONE, ZERO, DyadicGaussian, add_scaled
from amplitude.state_vector import StateVector, norm_squared, probability_at

small = st.integers(min_value=-50, max_value=50)
scales = st.integers(min_value=0, max_value=8)


@st.composite
def amplitudes(draw, parity=None):
    scale = draw(scales)
    if parity is not None and scale % 2 != parity:
        scale += 1
    return DyadicGaussian(draw(small), draw(small), scale)


def test_add_same_scale():
    assert add_scaled(DyadicGaussian(1, 0, 1), DyadicGaussian(1, 0, 1)) == DyadicGaussian(2, 0, 1)


def test_cancellation_gives_zero():
    total = DyadicGaussian(1, 0, 5) + DyadicGaussian(-1, 0, 5)
    assert total.is_zero()
    assert total == ZERO


def test_add_rescales_to_larger_scale():
    total = add_scaled(DyadicGaussian(1, 0, 0), DyadicGaussian(0, 1, 2))
    assert (total.re, total.im, total.scale) == (2, 1, 2)


def test_add_rejects_mixed_parity():
    with pytest.raises(ValueError):
        add_scaled(DyadicGaussian(1, 0, 0), DyadicGaussian(1, 0, 1))


def test_negative_scale_rejected():
    with pytest.raises(ValueError):
        DyadicGaussian(1, 0, -1)


def test_equality_is_by_value():
    assert DyadicGaussian(2, 0, 2) == ONE
    assert hash(DyadicGaussian(4, -2, 4)) == hash(DyadicGaussian(2, -1, 2))
    assert DyadicGaussian(1, 0, 1) != ONE


def test_canonical_zero():
    c = DyadicGaussian(0, 0, 6).canonical()
    assert (c.re, c.im, c.scale) == (0, 0, 0)


@given(a=amplitudes(parity=0), b=amplitudes(parity=0), c=amplitudes(parity=0))
def test_addition_commutes_and_associates(a, b, c):
    assert a + b == b + a
    assert (a + b) + c == a + (b + c)


@given(a=amplitudes())
def test_canonical_keeps_value(a):
    c = a.canonical()
    assert c == a
    assert c.abs2() == a.abs2()
    assert c.canonical() == c


@given(a=amplitudes(), b=amplitudes())
def test_abs2_is_multiplicative(a, b):
    assert (a * b).abs2() == a.abs2() * b.abs2()


@given(a=amplitudes())
def test_negate_and_subtract(a):
    assert (a - a).is_zero()
    assert (-a).abs2() == a.abs2()


def test_norm_of_single_entry():
    assert norm_squared(StateVector(2, 0, {(0, 2): (1, 0)})) == 1


def test_norm_of_step_two_state():
    v = StateVector(2, 2, {(-2, 1): (1, 0), (0, 4): (1, 0), (0, 3): (-1, 0), (2, 6): (1, 0)})
    assert norm_squared(v) == 1


def test_norm_of_eight_unit_entries():
    v = StateVector(2, 3, {(0, j): (1, 0) if j % 2 == 0 else (0, 1) for j in range(8)})
    assert norm_squared(v) == 1


def test_probability_at():
    v = StateVector(2, 1, {(-1, 0): (1, 0), (1, 5): (1, 0)})
    assert probability_at(v, -1) == Fraction(1, 2)
    assert probability_at(v, 3) == 0


def test_state_vector_drops_zeros_and_checks_basis():
    v = StateVector(1, 0, {(0, 0): (0, 0), (0, 1): (1, 0)})
    assert v.entries == {(0, 1): (1, 0)}
    assert v.amplitude_at(0, 1) == ONE
    assert v.amplitude_at(4, 0).is_zero()
    with pytest.raises(ValueError):
        StateVector(1, 0, {(0, 4): (1, 0)})
    with pytest.raises(ValueError):
        StateVector(3, 0, {})
