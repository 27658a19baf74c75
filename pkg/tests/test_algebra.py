import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from twistmoyal.algebra import (
    A,
    ABAR,
    OMEGA,
    OMEGABAR,
    ONE_ELEMENT,
    THETA,
    ZERO_ELEMENT,
    Monomial,
    NotAUnit,
    TwistedElement,
    coord_images,
    derive,
    derive_n,
    det,
    det_inv,
    format_element,
    from_record,
    gaussian,
    invert_unit,
    limit_omega_zero,
    mirror,
    parse_element,
    to_record,
)
from twistmoyal.randgen import random_laurent, random_unit
from twistmoyal.scalars import I, SQRT2

seeds = st.integers(min_value=0, max_value=10**6)


def elem(seed):
    return random_laurent(random.Random(seed))


def test_truncation():
    assert OMEGA * OMEGABAR == ZERO_ELEMENT
    assert OMEGA * OMEGA == ZERO_ELEMENT
    assert (ONE_ELEMENT + OMEGA) * (ONE_ELEMENT - OMEGA) == ONE_ELEMENT


def test_negative_weight_rejected():
    with pytest.raises(ValueError):
        TwistedElement.term(g=-1)


def test_determinant_relations():
    assert det() * det_inv() == ONE_ELEMENT
    assert invert_unit(det_inv()) == det()
    assert derive(det_inv(), "a") == -OMEGA
    assert derive(det_inv(), "abar") == -OMEGABAR
    for k in range(-4, 5):
        assert OMEGA * det() ** k == OMEGA


def test_gaussian_derivative():
    G = gaussian(1)
    assert derive(G, "a") == (ABAR * G * TwistedElement.term(t=-1)).scale(-2)
    assert derive(gaussian(3), "abar") == (A * gaussian(3) * TwistedElement.term(t=-1)).scale(-6)


def test_invert_unit_requires_single_leading_monomial():
    with pytest.raises(NotAUnit):
        invert_unit(A + ABAR)
    with pytest.raises(NotAUnit):
        invert_unit(OMEGA)
    with pytest.raises(NotAUnit):
        invert_unit(gaussian(1))


def test_negative_power():
    assert A ** -2 * A * A == ONE_ELEMENT
    assert (THETA * det_inv()) ** -1 == TwistedElement.term(t=-1) * det()


def test_coordinate_images():
    x1, x2, d1, d2 = coord_images()
    assert d1(x1) == ONE_ELEMENT and d2(x2) == ONE_ELEMENT
    assert d1(x2).is_zero() and d2(x1).is_zero()
    assert (x1 + x2.scale(I)).scale(SQRT2.inverse()) == A


def test_derive_n_matches_iteration():
    f = elem(5)
    assert derive_n(f, 2, 1) == derive(derive(derive(f, "a"), "a"), "abar")


def test_mirror_involution_and_swap():
    assert mirror(A * OMEGA) == ABAR * OMEGABAR
    assert Monomial(1, 1, 0, 2, 3).mirror() == Monomial(1, 0, 1, 3, 2)


def test_text_format():
    f = (THETA * ABAR * OMEGABAR * gaussian(1)).scale(Fraction(1, 2))
    assert format_element(f) == "1/2 θ^1 abar^1 wbar^1 G^1"
    assert parse_element("1/2 theta^1 abar^1 wbar^1 G^1") == f
    assert format_element(ZERO_ELEMENT) == "0"
    with pytest.raises(ValueError):
        parse_element("2 b^1")


@settings(max_examples=150)
@given(seeds, seeds, seeds)
def test_ring_axioms(s1, s2, s3):
    f, g, h = elem(s1), elem(s2), elem(s3)
    assert (f * g) * h == f * (g * h)
    assert f * (g + h) == f * g + f * h
    assert f * g == g * f
    assert f - f == ZERO_ELEMENT


@settings(max_examples=150)
@given(seeds, seeds)
def test_leibniz(s1, s2):
    f, g = elem(s1), elem(s2)
    for v in ("a", "abar"):
        assert derive(f * g, v) == derive(f, v) * g + f * derive(g, v)


@settings(max_examples=150)
@given(seeds, seeds)
def test_limit_is_homomorphism(s1, s2):
    f, g = elem(s1), elem(s2)
    assert limit_omega_zero(f * g) == limit_omega_zero(f) * limit_omega_zero(g)


@settings(max_examples=150)
@given(seeds, seeds)
def test_mirror_is_ring_map(s1, s2):
    f, g = elem(s1), elem(s2)
    assert mirror(f * g) == mirror(f) * mirror(g)
    assert mirror(mirror(f)) == f
    assert mirror(derive(f, "a")) == derive(mirror(f), "abar")


@settings(max_examples=150)
@given(seeds)
def test_units_invert(s):
    u = random_unit(random.Random(s))
    assert u * invert_unit(u) == ONE_ELEMENT


@settings(max_examples=100)
@given(seeds)
def test_serialization(s):
    f = elem(s)
    assert parse_element(format_element(f)) == f
    assert from_record(to_record(f)) == f
    assert hash(parse_element(format_element(f))) == hash(f)
