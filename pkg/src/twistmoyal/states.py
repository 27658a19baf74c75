"""Oscillator states, spectra and the printed closed forms they are audited against.

Ground truth is always the ladder recursion built from generator star-actions;
the printed formulas (state brackets, energies, lowering ladders) are only ever
compared against it.  States are stored unnormalized: the level-m right state
body is abar*(abar*(...*f00R)) = sqrt(m! theta^m) f_m0, so every coefficient
stays rational.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import factorial

from .algebra import (
    A,
    ABAR,
    OMEGA,
    OMEGABAR,
    ONE_ELEMENT,
    THETA,
    ZERO_ELEMENT,
    NotAUnit,
    TwistedElement,
    gaussian,
    invert_unit,
    limit_omega_zero,
    mirror,
    shift_weight,
)
from .star import hamiltonian_left, hamiltonian_right, star_gen_left, star_gen_right

MAX_LEVEL = 12
SIDES = ("right", "left")


class LevelTooLarge(ValueError):
    pass


class IndexOutOfRange(ValueError):
    pass


class NotProportional(ArithmeticError):
    def __init__(self, message: str, residual: TwistedElement | None = None):
        super().__init__(message)
        self.residual = residual


def _check_side(side: str):
    if side not in SIDES:
        raise ValueError(f"side must be 'right' or 'left', not {side!r}")


def _inv_theta(n: int = 1) -> TwistedElement:
    return TwistedElement.term(t=-n)


@dataclass(frozen=True)
class NormalizedState:
    """``body`` times the suppressed factor (m! n! theta^(m+n))^(-1/2)."""

    body: TwistedElement
    norm_tag: tuple[int, int] = (0, 0)


@dataclass(frozen=True)
class LadderState:
    body: TwistedElement
    side: str
    level: int

    @property
    def norm_tag(self) -> tuple[int, int]:
        return (self.level, 0) if self.side == "right" else (0, self.level)

    def normalized(self) -> NormalizedState:
        return NormalizedState(self.body, self.norm_tag)


# -- fundamental and excited states ---------------------------------------------

def fundamental(side: str = "right") -> LadderState:
    """f00R = 2 exp(-(2 a abar/(theta e^-1))(1 - abar wbar/2)) to first order,
    i.e. 2 G (1 - 2 a^2 abar w/theta - a abar^2 wbar/theta); f00L is its mirror."""
    _check_side(side)
    correction = (
        ONE_ELEMENT
        - (A * A * ABAR * OMEGA * _inv_theta()).scale(2)
        - A * ABAR * ABAR * OMEGABAR * _inv_theta()
    )
    body = (correction * gaussian(1)).scale(2)
    if side == "left":
        body = mirror(body)
    return LadderState(body, side, 0)


@lru_cache(maxsize=None)
def _ladder_body(side: str, level: int) -> TwistedElement:
    if level == 0:
        return fundamental(side).body
    prev = _ladder_body(side, level - 1)
    if side == "right":
        return star_gen_left("abar", prev)
    return star_gen_right(prev, "a")


def ladder(side: str, level: int, max_level: int = MAX_LEVEL) -> LadderState:
    """Unnormalized level state: abar^{*m} * f00R (right) or f00L * a^{*n} (left)."""
    _check_side(side)
    if level < 0:
        raise IndexOutOfRange("level must be nonnegative")
    if level > max_level:
        raise LevelTooLarge(f"level {level} exceeds maximum {max_level}")
    return LadderState(_ladder_body(side, level), side, level)


def u_sequence(m: int) -> Fraction:
    """U_m = (m-1) 2^(m-2) + sum_{k=0}^{m-3} (k+1) 2^(k+1) for m >= 3; U_0 = U_1 = 0, U_2 = 1."""
    if m <= 1:
        return Fraction(0)
    if m == 2:
        return Fraction(1)
    return Fraction((m - 1) * 2 ** (m - 2) + sum((k + 1) * 2 ** (k + 1) for k in range(m - 2)))


def closed_form(side: str, level: int) -> TwistedElement:
    """Printed state bracket times f00, i.e. sqrt(m! theta^m) f_m0 as printed.

    [2^m abar^m (1 + m a w/2 - m abar wbar/4) - U_m theta w abar^(m-1)/2] f00R
    """
    _check_side(side)
    m = level
    if m < 0:
        raise IndexOutOfRange("level must be nonnegative")
    bracket = (ABAR ** m).scale(2 ** m) * (
        ONE_ELEMENT + (A * OMEGA).scale(Fraction(m, 2)) - (ABAR * OMEGABAR).scale(Fraction(m, 4))
    )
    if u_sequence(m):
        bracket = bracket - (THETA * OMEGA * _abar_power(m - 1)).scale(u_sequence(m) / 2)
    out = bracket * fundamental("right").body
    return mirror(out) if side == "left" else out


def _abar_power(n: int) -> TwistedElement:
    return TwistedElement.term(q=n)


def _a_power(n: int) -> TwistedElement:
    return TwistedElement.term(p=n)


# -- eigenvalues ----------------------------------------------------------------

def extract_eigenvalue(Hf: TwistedElement, f: TwistedElement) -> TwistedElement:
    """The element E with E f = Hf to first order.

    f's zeroth-order part must be one monomial times a common Gaussian weight.
    """
    if Hf.is_zero():
        return ZERO_ELEMENT
    wf = f.weights()
    wh = Hf.weights()
    if len(wf) != 1:
        raise NotProportional("state carries mixed Gaussian weights")
    (g0,) = wf
    if wh != {g0}:
        raise NotProportional("Gaussian weights of H f and f differ", Hf)
    try:
        inv = invert_unit(shift_weight(f, -g0))
    except NotAUnit as exc:
        raise NotProportional(str(exc)) from exc
    E = shift_weight(Hf, -g0) * inv
    residual = E * f - Hf
    if residual:
        raise NotProportional("no pointwise eigenvalue", residual)
    return E


def engine_energy(side: str, level: int) -> TwistedElement:
    """Eigenvalue of the ladder state, Hamiltonian applied by the series."""
    st = ladder(side, level)
    if side == "right":
        return extract_eigenvalue(hamiltonian_left(st.body, "series"), st.body)
    return extract_eigenvalue(hamiltonian_right(st.body, "series"), st.body)


def engine_energy_method(side: str, level: int, method: str) -> TwistedElement:
    st = ladder(side, level)
    H = hamiltonian_left if side == "right" else hamiltonian_right
    return extract_eigenvalue(H(st.body, method), st.body)


# -- printed energies -------------------------------------------------------------

ENERGY_KINDS = ("right_m", "left_n", "lambda11_R", "lambda11_L", "lambda_mk_R", "lambda_nl_L")


def _sigma(m: int, k: int) -> Fraction:
    """sum_{j=1}^{k} (m + 4j + 1)/(m - j)!  (empty sum is 0)."""
    return sum((Fraction(m + 4 * j + 1, factorial(m - j)) for j in range(1, k + 1)), Fraction(0))


def _energy_right_m(m: int) -> TwistedElement:
    a_w = A * OMEGA
    ab_wb = ABAR * OMEGABAR
    theta_w_over_abar = THETA * OMEGA * _abar_power(-1)
    inner = (
        TwistedElement.const(2 * m + 1)
        - a_w.scale(m)
        - ab_wb.scale(3 * m + 2)
        - theta_w_over_abar.scale(Fraction(m * m, 4))
        + theta_w_over_abar.scale(u_sequence(m) / 2 ** m)
    )
    return (THETA * inner).scale(Fraction(1, 2))


def _energy_lambda11_R(m: int) -> TwistedElement:
    inner = ONE_ELEMENT - (ABAR * OMEGABAR).scale((_sigma(m, m) + 4) / 2)
    return (THETA * inner).scale(Fraction(1, 2))


def _energy_lambda_mk_R(m: int, k: int) -> TwistedElement:
    theta_w_over_abar = THETA * OMEGA * _abar_power(-1)
    d = m - k
    bracket = Fraction((d - 1) * factorial(d)) * _sigma(m, k) - d * (m + 4 * k + 6) - 4
    inner = (
        TwistedElement.const(2 * d + 1)
        - (A * OMEGA).scale(d)
        + (ABAR * OMEGABAR).scale(bracket / 2)
        - theta_w_over_abar.scale(Fraction(d * (m - 2 * k), 4))
        + theta_w_over_abar.scale(Fraction((d + 1) * d) * u_sequence(m) / (m * 2 ** (m + 1)))
    )
    return (THETA * inner).scale(Fraction(1, 2))


def printed_energy(kind: str, *indices: int) -> TwistedElement:
    """Printed energy formulas rendered as elements.

    right_m(m), left_n(n): single-sided states, m >= 0.
    lambda11_R(m), lambda11_L(n): (1,1)-particle energies, index > 0.
    lambda_mk_R(m, k), lambda_nl_L(n, l): lowered states, m >= k > 0.
    """
    if kind in ("right_m", "left_n"):
        (m,) = indices
        if m < 0:
            raise IndexOutOfRange("level must be nonnegative")
        e = _energy_right_m(m)
        return e if kind == "right_m" else mirror(e)
    if kind in ("lambda11_R", "lambda11_L"):
        (m,) = indices
        if m <= 0:
            raise IndexOutOfRange("(1,1) energies are printed for index > 0 only")
        e = _energy_lambda11_R(m)
        return e if kind == "lambda11_R" else mirror(e)
    if kind in ("lambda_mk_R", "lambda_nl_L"):
        m, k = indices
        if not m >= k > 0:
            raise IndexOutOfRange("requires m >= k > 0")
        e = _energy_lambda_mk_R(m, k)
        return e if kind == "lambda_mk_R" else mirror(e)
    raise ValueError(f"unknown energy kind {kind!r}")


# -- lowering ladders -------------------------------------------------------------

def apply_ladder_lowering(side: str, state: LadderState | TwistedElement, power: int) -> TwistedElement:
    """a^{*power} * body (right) or body * abar^{*power} (left), one generator at a time."""
    _check_side(side)
    body = state.body if isinstance(state, LadderState) else state
    for _ in range(power):
        if not body:
            break
        body = star_gen_left("a", body) if side == "right" else star_gen_right(body, "abar")
    return body


def _falling(m: int, k: int) -> int:
    out = 1
    for i in range(k):
        out *= m - i
    return out


def _lowering_closed_form_right(m: int, k: int) -> TwistedElement:
    f00 = fundamental("right").body
    if k == m + 2:
        return ZERO_ELEMENT
    if k == m + 1:
        c = -Fraction(factorial(m)) * _sigma(m, m) / 8
        return (THETA ** (m + 1) * OMEGABAR * f00).scale(c)
    U = u_sequence(m)
    a_w = A * OMEGA
    ab_wb = ABAR * OMEGABAR
    if k == 1:
        bracket = ONE_ELEMENT + a_w.scale(Fraction(m - 2, 2)) - ab_wb.scale(Fraction(m + 5, 4))
        tail = Fraction(m - 1) * U / 4
    elif k == 2 and m >= 2:
        bracket = (ONE_ELEMENT + a_w.scale(Fraction(m - 4, 2))
                   - ab_wb.scale(Fraction((m + 9) * (m - 1) + m + 5, 4 * (m - 1))))
        tail = Fraction((m - 1) * (m - 2)) * U / 8
    elif k == m:
        bracket = ONE_ELEMENT - a_w.scale(Fraction(m, 2)) - ab_wb.scale(_sigma(m, m) / 4)
        tail = Fraction(0)
    else:
        bracket = (ONE_ELEMENT + a_w.scale(Fraction(m - 2 * k, 2))
                   - ab_wb.scale(factorial(m - k) * _sigma(m, k) / 4))
        tail = Fraction(_falling(m - 1, k)) * U / 2 ** (k + 1)
    # sqrt(m! theta^m) * m(m-1)...(m-k+1) 2^(m-k) / sqrt(m! theta^(m-2k)) = theta^k m!/(m-k)! 2^(m-k)
    lead = (THETA ** k * _abar_power(m - k) * bracket).scale(_falling(m, k) * 2 ** (m - k))
    out = lead
    if tail:
        out = out - (THETA ** (k + 1) * OMEGA * _abar_power(m - k - 1)).scale(tail)
    return out * f00


def lowering_closed_form(side: str, m: int, k: int) -> TwistedElement:
    """Printed a^k * f_m0 (right) or f_0n * abar^k (left), multiplied by sqrt(m! theta^m).

    The k = 1 and k = 2 lines use their own printed displays; other k <= m use
    the general line; k = m + 1 and k = m + 2 use the last two lines.
    """
    _check_side(side)
    if m < 0 or k < 0 or k > m + 2:
        raise IndexOutOfRange("requires 0 <= k <= m + 2")
    if k == 0:
        out = closed_form("right", m)
    else:
        out = _lowering_closed_form_right(m, k)
    return mirror(out) if side == "left" else out


def degeneracy_factor(side: str, m: int) -> TwistedElement:
    """c with a^{*(m+1)} * f~_m = c f00 (right side), via extract_eigenvalue."""
    lowered = apply_ladder_lowering(side, ladder(side, m), m + 1)
    return extract_eigenvalue(lowered, fundamental(side).body)


def lambda_state(side: str, m: int, k: int) -> TwistedElement:
    """a^{*k} * f~_m (right) or f~_m * abar^{*k} (left)."""
    return apply_ladder_lowering(side, ladder(side, m), k)


def lambda_energy(side: str, m: int, k: int) -> TwistedElement:
    body = lambda_state(side, m, k)
    if side == "right":
        return extract_eigenvalue(hamiltonian_left(body, "series"), body)
    return extract_eigenvalue(hamiltonian_right(body, "series"), body)


# -- matrix basis -------------------------------------------------------------------

@dataclass(frozen=True)
class MatrixBasisElement:
    """prefactor * a^{*k} * b~_mn * abar^{*l}, with b~_mn = sqrt(m! n! theta^(m+n)) b_mn.

    b~ is kept unnormalized so the raising rules carry no square roots; the
    norm tag (m, n) records the suppressed factor.
    """

    m: int
    n: int
    prefactor: TwistedElement = field(default=ONE_ELEMENT)
    k: int = 0
    l: int = 0

    @property
    def norm_tag(self) -> tuple[int, int]:
        return (self.m, self.n)

    def is_zero(self) -> bool:
        return self.prefactor.is_zero()


MATRIX_OPS = ("raise_left", "raise_right", "lower_left", "lower_right", "H_left", "H_right")


def matrix_basis_action(op: str, b: MatrixBasisElement) -> tuple[MatrixBasisElement, TwistedElement]:
    """Rewrite-rule action on the matrix basis.

    Returns the new basis element and the scalar factor it picked up (the
    eigenvalue for the H actions, 1 for raises, 0 for annihilation).
    """
    one = ONE_ELEMENT
    if op == "raise_left":
        if b.k:
            raise ValueError("raise after lowering has no rewrite rule")
        return MatrixBasisElement(b.m + 1, b.n, b.prefactor, 0, b.l), one
    if op == "raise_right":
        if b.l:
            raise ValueError("raise after lowering has no rewrite rule")
        return MatrixBasisElement(b.m, b.n + 1, b.prefactor, b.k, 0), one
    if op == "lower_left":
        k = b.k + 1
        # a * b00 = 0; a^(m+2) annihilates level m
        if k >= b.m + 2 or b.m == 0:
            return MatrixBasisElement(b.m, b.n, ZERO_ELEMENT, k, b.l), ZERO_ELEMENT
        return MatrixBasisElement(b.m, b.n, b.prefactor, k, b.l), one
    if op == "lower_right":
        l = b.l + 1
        if l >= b.n + 2 or b.n == 0:
            return MatrixBasisElement(b.m, b.n, ZERO_ELEMENT, b.k, l), ZERO_ELEMENT
        return MatrixBasisElement(b.m, b.n, b.prefactor, b.k, l), one
    if op == "H_left":
        if b.is_zero():
            return b, ZERO_ELEMENT
        if b.k == 0:
            E = printed_energy("right_m", b.m)
        elif b.k <= b.m:
            E = printed_energy("lambda_mk_R", b.m, b.k)
        else:
            raise ValueError("no printed energy for a^(m+1) lowered states")
        return MatrixBasisElement(b.m, b.n, E * b.prefactor, b.k, b.l), E
    if op == "H_right":
        if b.is_zero():
            return b, ZERO_ELEMENT
        if b.l == 0:
            E = printed_energy("left_n", b.n)
        elif b.l <= b.n:
            E = printed_energy("lambda_nl_L", b.n, b.l)
        else:
            raise ValueError("no printed energy for abar^(n+1) lowered states")
        return MatrixBasisElement(b.m, b.n, E * b.prefactor, b.k, b.l), E
    raise ValueError(f"unknown matrix basis op {op!r}")
