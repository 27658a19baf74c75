import math

import numpy as np
import pytest

from twistmoyal.algebra import A, ABAR, ONE_ELEMENT, TwistedElement, gaussian, parse_element
from twistmoyal.numeric import (
    DivisionAtPole,
    NonIntegrable,
    NumericConfig,
    NumericPoint,
    NumericRecord,
    PoleOnGrid,
    evaluate,
    evaluate_state,
    plane_wave_check,
    star_quadrature,
)
from twistmoyal.states import ladder

F00 = gaussian(1).scale(2)


def test_eval_fundamental():
    pt = NumericPoint.from_real(0.3, -0.2, 1.0)
    assert evaluate(F00, pt) == pytest.approx(2 * math.exp(-0.13), abs=1e-14)
    assert pt.x == pytest.approx((0.3, -0.2))


def test_eval_norm_tag():
    pt = NumericPoint.from_real(0.4, 0.1, 2.0)
    st = ladder("right", 3)
    assert evaluate_state(st, pt) == pytest.approx(evaluate(st.body, pt) / math.sqrt(6 * 2.0 ** 3))


def test_eval_pole():
    with pytest.raises(DivisionAtPole):
        evaluate(A ** -1, NumericPoint.from_real(0, 0))


def test_config_validation():
    with pytest.raises(ValueError):
        NumericConfig(theta_val=0)
    with pytest.raises(ValueError):
        NumericConfig(quadrature_nodes=4)
    with pytest.raises(ValueError):
        NumericConfig(omega_val=0.1j, omegabar_val=0.1j)
    with pytest.raises(ValueError):
        NumericConfig(kernel="other")
    assert NumericConfig(omega_val=0.1 + 0.2j).omegabar_val == 0.1 - 0.2j


def test_quadrature_needs_gaussians():
    pt = NumericPoint.from_real(0, 0)
    with pytest.raises(NonIntegrable):
        star_quadrature(ONE_ELEMENT, F00, pt)
    with pytest.raises(PoleOnGrid):
        star_quadrature(A ** -1 * F00, F00, pt, NumericConfig(quadrature_nodes=9))


@pytest.mark.parametrize("x", [(0.0, 0.0), (0.3, -0.2), (1.0, -0.4)])
def test_idempotent_fundamental(x):
    pt = NumericPoint.from_real(*x, 1.0)
    assert abs(star_quadrature(F00, F00, pt) - evaluate(F00, pt)) < 1e-12


def test_quadrature_theta_scaling():
    pt = NumericPoint.from_real(0.5, 0.2, 0.5)
    got = star_quadrature(F00, F00, pt, NumericConfig(theta_val=0.5))
    assert abs(got - evaluate(F00, pt)) < 1e-10


def test_kernel_orientation():
    pt = NumericPoint.from_real(0.3, -0.2, 1.0)
    h = ABAR * F00
    # (abar f00) * f00 = abar f00 and f00 * (abar f00) = 0 at w = 0
    assert abs(star_quadrature(h, F00, pt) - evaluate(h, pt)) < 1e-10
    assert abs(star_quadrature(F00, h, pt)) < 1e-10
    printed = NumericConfig(kernel="printed")
    assert abs(star_quadrature(F00, h, pt, printed) - evaluate(h, pt)) < 1e-10


def test_higher_weight_converges():
    pt = NumericPoint.from_real(0.2, 0.1, 1.0)
    f = gaussian(2) + A * ABAR * gaussian(3)
    lo = star_quadrature(f, F00, pt, NumericConfig(quadrature_nodes=64))
    hi = star_quadrature(f, F00, pt, NumericConfig(quadrature_nodes=96))
    assert np.isfinite(lo) and abs(lo - hi) < 1e-10


def test_plane_wave():
    pt = NumericPoint.from_real(0.2, 0.3, 1.0)
    s, f = plane_wave_check((0.5, 0.1), (-0.3, 0.7), pt)
    assert abs(s - f) < 1e-12
    ptw = NumericPoint.from_real(0.2, 0.3, 1.0, 0.05)
    s, f = plane_wave_check((0.5, 0.1), (-0.3, 0.7), ptw)
    assert 0 < abs(s - f) < 1e-3


def test_record():
    r = NumericRecord(1 + 0j, 1.5 + 0j, 48)
    assert r.abs_error == 0.5 and r.rel_error == 0.5
    assert r.to_dict()["nodes"] == 48


def test_independent_point_homomorphism():
    pt = NumericPoint(0.7 + 0.1j, 0.3 - 0.4j, 1.3, independent=True)
    f, g = parse_element("2 a^2 G^1 + -1/3 θ^1 abar^-1"), parse_element("1 a^1 abar^1 + 3")
    assert evaluate(f * g, pt) == pytest.approx(evaluate(f, pt) * evaluate(g, pt))
    assert evaluate(TwistedElement(), pt) == 0
