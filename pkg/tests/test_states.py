from fractions import Fraction
from math import factorial

import pytest

from twistmoyal.algebra import (
    A,
    ABAR,
    OMEGA,
    OMEGABAR,
    THETA,
    TwistedElement,
    gaussian,
    limit_omega_zero,
    mirror,
)
from twistmoyal.star import hamiltonian_left, star_gen_left
from twistmoyal.states import (
    IndexOutOfRange,
    LevelTooLarge,
    MatrixBasisElement,
    NotProportional,
    apply_ladder_lowering,
    lowering_closed_form,
    closed_form,
    degeneracy_factor,
    engine_energy,
    engine_energy_method,
    extract_eigenvalue,
    fundamental,
    ladder,
    lambda_energy,
    matrix_basis_action,
    printed_energy,
    u_sequence,
)


def half_theta(m):
    return THETA.scale(Fraction(2 * m + 1, 2))


def test_fundamental_limits_and_mirror():
    assert limit_omega_zero(fundamental("right").body) == gaussian(1).scale(2)
    assert mirror(fundamental("right").body) == fundamental("left").body
    with pytest.raises(ValueError):
        fundamental("up")


def test_level_bounds():
    with pytest.raises(LevelTooLarge):
        ladder("right", 13)
    with pytest.raises(IndexOutOfRange):
        ladder("right", -1)
    assert ladder("right", 5, max_level=5).level == 5


def test_normalization_tag():
    st = ladder("right", 3)
    assert st.norm_tag == (3, 0)
    assert ladder("left", 2).norm_tag == (0, 2)
    assert st.normalized().body == st.body


def test_recursion():
    for m in range(6):
        assert star_gen_left("abar", ladder("right", m).body) == ladder("right", m + 1).body


@pytest.mark.parametrize("m", range(4))
def test_closed_form_low_levels(m):
    assert ladder("right", m).body == closed_form("right", m)
    assert ladder("left", m).body == closed_form("left", m)


def test_u_sequence_printed():
    assert [u_sequence(m) for m in range(7)] == [0, 0, 1, 6, 22, 66, 178]


def test_closed_form_level_four_residual():
    # the printed U_4 = 22 disagrees with the recursion, which implies 24
    res = ladder("right", 4).body - closed_form("right", 4)
    assert res == (THETA * OMEGA * ABAR ** 3 * fundamental("right").body).scale(-1)
    assert limit_omega_zero(res).is_zero()


def test_series_ground_energy():
    assert engine_energy("right", 0) == THETA.scale(Fraction(1, 2)) * (1 - ABAR * OMEGABAR)
    assert engine_energy("left", 0) == mirror(engine_energy("right", 0))


def test_bracket_ground_energy_matches_printed():
    for m in range(4):
        assert engine_energy_method("right", m, "bracket") == printed_energy("right_m", m)
        assert engine_energy_method("left", m, "bracket") == printed_energy("left_n", m)


def test_series_energy_offset_is_constant():
    for m in range(4):
        diff = engine_energy("right", m) - printed_energy("right_m", m)
        assert diff == (THETA * ABAR * OMEGABAR).scale(Fraction(1, 2))


@pytest.mark.parametrize("m", range(9))
def test_energy_limits(m):
    assert limit_omega_zero(engine_energy("right", m)) == half_theta(m)
    assert limit_omega_zero(printed_energy("right_m", m)) == half_theta(m)


def test_extract_eigenvalue_rejects():
    f = fundamental("right").body
    with pytest.raises(NotProportional):
        extract_eigenvalue(gaussian(2), f)
    with pytest.raises(NotProportional):
        extract_eigenvalue((A * gaussian(1)) + gaussian(1), gaussian(1) * (A + ABAR))
    with pytest.raises(NotProportional):
        extract_eigenvalue(gaussian(1), gaussian(1) + gaussian(2))
    # Laurent ratios are allowed
    assert extract_eigenvalue(gaussian(1) + A * gaussian(1), A * A * gaussian(1)) == A ** -2 + A ** -1


def test_extract_eigenvalue_roundtrip():
    f = ladder("right", 2).body
    E = THETA * (1 + ABAR * OMEGABAR) + A * OMEGA
    assert extract_eigenvalue(E * f, f) == E
    assert extract_eigenvalue(hamiltonian_left(f), f) == engine_energy("right", 2)


@pytest.mark.parametrize("m", range(7))
def test_degeneracy(m):
    for side in ("right", "left"):
        assert apply_ladder_lowering(side, ladder(side, m), m + 2).is_zero()


def test_lowered_to_ground_factor():
    for m in range(7):
        got = apply_ladder_lowering("right", ladder("right", m), m + 1)
        c = Fraction(-factorial(m) * 3 * m * (m + 1), 8)
        assert got == (THETA ** (m + 1) * OMEGABAR).scale(c) * fundamental("right").body
        assert degeneracy_factor("right", m) == (THETA ** (m + 1) * OMEGABAR).scale(c)


def test_lowering_identities_small_levels():
    for m in (1, 2):
        for k in range(1, m + 3):
            assert apply_ladder_lowering("right", ladder("right", m), k) == lowering_closed_form("right", m, k)
    assert lowering_closed_form("right", 3, 0) == closed_form("right", 3)


def test_lambda_limits():
    for m in range(1, 5):
        for k in range(1, m + 1):
            assert limit_omega_zero(lambda_energy("right", m, k)) == half_theta(m - k)


def test_printed_energy_domains():
    with pytest.raises(IndexOutOfRange):
        printed_energy("lambda11_R", 0)
    with pytest.raises(IndexOutOfRange):
        printed_energy("lambda_mk_R", 2, 3)
    with pytest.raises(ValueError):
        printed_energy("bogus", 1)
    assert printed_energy("lambda_mk_R", 3, 3) == printed_energy("lambda11_R", 3)
    assert printed_energy("lambda_nl_L", 2, 1) == mirror(printed_energy("lambda_mk_R", 2, 1))


def test_matrix_basis_rules():
    b = MatrixBasisElement(0, 0)
    up, c = matrix_basis_action("raise_left", b)
    assert (up.m, up.n) == (1, 0) and c == TwistedElement.const(1)
    down, c = matrix_basis_action("lower_left", b)
    assert down.is_zero() and c.is_zero()
    b = MatrixBasisElement(2, 1)
    _, E = matrix_basis_action("H_left", b)
    assert E == printed_energy("right_m", 2)
    _, E = matrix_basis_action("H_right", b)
    assert E == printed_energy("left_n", 1)
    for _ in range(4):
        b, _ = matrix_basis_action("lower_left", b)
    assert b.is_zero()
    with pytest.raises(ValueError):
        matrix_basis_action("spin", b)
