import random
from fractions import Fraction

import pytest
import sympy as sp

from oracle import einv_real, first_order, is_zero, moyal, theta, to_sympy, x1, x2
from twistmoyal import star as st
from twistmoyal.algebra import (
    A,
    ABAR,
    OMEGA,
    OMEGABAR,
    ONE_ELEMENT,
    THETA,
    TwistedElement,
    derive,
    det_inv,
    gaussian,
    limit_omega_zero,
    mirror,
)
from twistmoyal.randgen import random_gaussian_class, random_laurent, random_polynomial
from twistmoyal.scalars import I
from twistmoyal.states import fundamental


def rand(i):
    r = random.Random(i)
    return random_gaussian_class(r) if i % 2 else random_laurent(r)


def test_canonical_commutators():
    te = THETA * det_inv()
    assert st.commutator_star(A, ABAR) == te
    assert st.commutator_star(st.coordinate(1), st.coordinate(2)) == te.scale(I)
    assert st.commutator_star(A, A).is_zero()


def test_ground_states_annihilated():
    assert st.star_gen_left("a", fundamental("right").body).is_zero()
    assert st.star_gen_right(fundamental("left").body, "abar").is_zero()


def test_theta_tilde_is_theta_einv_J():
    tt = st.FRAME.theta_tilde()
    te = THETA * det_inv()
    assert tt == [[TwistedElement(), te], [-te, TwistedElement()]]


@pytest.mark.parametrize("gen", st.GENERATORS)
def test_series_matches_generator_actions(gen):
    P = {"a": A, "abar": ABAR, "x1": st.coordinate(1), "x2": st.coordinate(2)}[gen]
    for i in range(30):
        f = rand(i)
        assert st.star_series(P, f, "left") == st.star_gen_left(gen, f)
        assert st.star_series(P, f, "right") == st.star_gen_right(f, gen)


def test_star_dispatch_and_nonterminating():
    f = fundamental("right").body
    assert st.star(A, f) == st.star_gen_left("a", f)
    assert st.star(f, A) == st.star_gen_right(f, "a")
    with pytest.raises(st.NonTerminating):
        st.star(f, f)


def test_einv_power_truncation():
    expected = (THETA ** 3).scale(Fraction(1, 8)) * (ONE_ELEMENT - (A * OMEGA).scale(3) - (ABAR * OMEGABAR).scale(3))
    assert st.einv_power_coefficient(3) == expected


def test_w0_limit_matches_sympy_moyal():
    # independent oracle: constant Moyal product in the real chart
    for i in range(6):
        r = random.Random(100 + i)
        P = limit_omega_zero(random_polynomial(r, max_terms=3, max_degree=2))
        g = limit_omega_zero(random_polynomial(r, max_terms=3, max_degree=3))
        engine = to_sympy(limit_omega_zero(st.star_series(P, g, "left")))
        assert is_zero(engine - moyal(to_sympy(P), to_sympy(g), 3))


def test_w0_gaussian_against_sympy():
    P = ABAR * ABAR
    f = gaussian(1).scale(2)
    engine = to_sympy(limit_omega_zero(st.star_series(P, f, "left")))
    assert is_zero(engine - moyal(to_sympy(P), to_sympy(f), 2))


@pytest.mark.parametrize("mu", [1, 2])
def test_twisted_coordinate_action_against_real_chart(mu):
    # x^1 * f = x^1 f + (i/2) theta e^-1 d_2 f and x^2 * f = x^2 f - (i/2) theta e^-1 d_1 f, in x coordinates
    for i in range(4):
        f = random_laurent(random.Random(200 + i))
        F = to_sympy(f)
        if mu == 1:
            expected = x1 * F + sp.I / 2 * theta * einv_real() * sp.diff(F, x2)
        else:
            expected = x2 * F - sp.I / 2 * theta * einv_real() * sp.diff(F, x1)
        engine = to_sympy(st.star_gen_left(f"x{mu}", f))
        assert is_zero(engine - first_order(expected))


def test_anticommutator_and_unit():
    for i in range(20):
        f = rand(i)
        for mu in (1, 2):
            x = st.coordinate(mu)
            assert st.anticommutator_star(x, f) == (x * f).scale(2)
        assert st.star_series(ONE_ELEMENT, f, "left") == f


def test_mirror_anti_automorphism():
    for i in range(20):
        r = random.Random(300 + i)
        P, g = random_polynomial(r), random_laurent(r)
        assert mirror(st.star_series(P, g, "left")) == st.star_series(mirror(P), mirror(g), "right")


def test_jacobi_triples():
    res = st.jacobi_residuals()
    assert len(res) == 8
    assert all(r.is_zero() for r in res.values())


def test_hamiltonian_methods_limit_agree():
    f = fundamental("right").body
    vals = [limit_omega_zero(st.hamiltonian_left(f, m)) for m in st.HAMILTONIAN_METHODS]
    assert vals[0] == vals[1] == vals[2]
    with pytest.raises(ValueError):
        st.hamiltonian_left(f, "nope")


def test_hamiltonian_method_gaps():
    # the three first-order forms differ by fixed differential operators
    f = random_gaussian_class(random.Random(7), weight=1)
    series = st.hamiltonian_left(f, "series")
    te2 = (THETA * THETA).scale(Fraction(1, 8))
    mu = series + te2 * (OMEGA * derive(f, "abar") + OMEGABAR * derive(f, "a"))
    bracket = series + te2.scale(2) * OMEGABAR * derive(f, "a")
    assert st.hamiltonian_left(f, "mu_operator") == mu
    assert st.hamiltonian_left(f, "bracket") == bracket


def test_associator_probe():
    f00 = fundamental("right").body
    G = gaussian(1)
    assert st.associator(ABAR, A, f00) == THETA * ABAR * OMEGABAR * G
    assert st.associator(A, ABAR, f00) == THETA * A * OMEGA * G
    assert limit_omega_zero(st.associator(A, ABAR, f00)).is_zero()


def test_leibniz_frame_fields():
    x1c, x2c = st.coordinate(1), st.coordinate(2)
    assert st.vector_field_apply(1, x1c) == ONE_ELEMENT + st.FRAME.omega1 * x2c
    res = st.leibniz_residual(1, x1c, x2c)
    assert not res.is_zero()
    assert limit_omega_zero(res).is_zero()
