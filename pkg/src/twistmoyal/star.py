"""Twisted star product on the (a, abar) chart, first order in the twist.

The product is

    f * g = m[ sum_n (theta e^{-1}/2)^n sum_k (-1)^{n-k}/(k!(n-k)!)
               (d_a (x) d_abar)^k (d_abar (x) d_a)^{n-k} (f (x) g) ]

with e^{-1} = 1 - a w - abar wbar evaluated at the outer point, i.e. multiplied
in after the bi-differential operator.  When one factor is a polynomial the
sum stops at its degree, so everything here is exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .algebra import (
    A,
    ABAR,
    OMEGA,
    OMEGABAR,
    ONE_ELEMENT,
    THETA,
    ZERO_ELEMENT,
    TwistedElement,
    coord_images,
    derive,
    det,
    det_inv,
)
from .scalars import I, INV_SQRT2, Number

GENERATORS = ("a", "abar", "x1", "x2")


class NonTerminating(ValueError):
    """The series only terminates when one factor is a polynomial."""


@dataclass(frozen=True)
class FrameData:
    """The affine frame e_a^mu = delta + omega^mu_{ab} x^b in D = 2.

    ``omega1``, ``omega2`` are the frame constants omega^1_12, omega^2_12
    written through w, wbar.
    """

    omega1: TwistedElement
    omega2: TwistedElement
    x1: TwistedElement
    x2: TwistedElement

    @classmethod
    def standard(cls) -> FrameData:
        x1, x2, _, _ = coord_images()
        # w = (om2 + i om1)/sqrt2, wbar = (om2 - i om1)/sqrt2
        omega2 = (OMEGA + OMEGABAR).scale(INV_SQRT2)
        omega1 = (OMEGA - OMEGABAR).scale(INV_SQRT2 * I.inverse())
        return cls(omega1, omega2, x1, x2)

    def e_matrix(self) -> list[list[TwistedElement]]:
        """Rows a = 1, 2; columns mu = 1, 2."""
        return [
            [ONE_ELEMENT + self.omega1 * self.x2, self.omega2 * self.x2],
            [-(self.omega1 * self.x1), ONE_ELEMENT - self.omega2 * self.x1],
        ]

    def det_inv(self) -> TwistedElement:
        e = self.e_matrix()
        return e[0][0] * e[1][1] - e[0][1] * e[1][0]

    def theta_tilde(self) -> list[list[TwistedElement]]:
        """Theta^{ab} e_a^mu e_b^nu with Theta = theta J."""
        e = self.e_matrix()
        out = [[ZERO_ELEMENT, ZERO_ELEMENT], [ZERO_ELEMENT, ZERO_ELEMENT]]
        for mu in range(2):
            for nu in range(2):
                out[mu][nu] = THETA * (e[0][mu] * e[1][nu] - e[1][mu] * e[0][nu])
        return out


FRAME = FrameData.standard()
_X1, _X2, _D1, _D2 = coord_images()
_HALF_THETA_EINV = (THETA * det_inv()).scale(Fraction(1, 2))


def star_gen_left(gen: str, f: TwistedElement) -> TwistedElement:
    """gen * f for gen in {a, abar, x1, x2}."""
    if gen == "a":
        return A * f + _HALF_THETA_EINV * derive(f, "abar")
    if gen == "abar":
        return ABAR * f - _HALF_THETA_EINV * derive(f, "a")
    if gen == "x1":
        return _X1 * f + (_HALF_THETA_EINV * _D2(f)).scale(I)
    if gen == "x2":
        return _X2 * f - (_HALF_THETA_EINV * _D1(f)).scale(I)
    raise ValueError(f"unknown generator {gen!r}")


def star_gen_right(f: TwistedElement, gen: str) -> TwistedElement:
    """f * gen for gen in {a, abar, x1, x2}."""
    if gen == "a":
        return A * f - _HALF_THETA_EINV * derive(f, "abar")
    if gen == "abar":
        return ABAR * f + _HALF_THETA_EINV * derive(f, "a")
    if gen == "x1":
        return _X1 * f - (_HALF_THETA_EINV * _D2(f)).scale(I)
    if gen == "x2":
        return _X2 * f + (_HALF_THETA_EINV * _D1(f)).scale(I)
    raise ValueError(f"unknown generator {gen!r}")


def star_x_general(mu: int, f: TwistedElement, side: str = "left") -> TwistedElement:
    """x^mu * f via Theta^{ab} e_a^mu e_b^rho d_rho, built from the frame."""
    tt = FRAME.theta_tilde()
    x = (FRAME.x1, FRAME.x2)[mu - 1]
    grad = TwistedElement()
    for rho, d in enumerate((_D1, _D2)):
        grad = grad + tt[mu - 1][rho] * d(f)
    sign = 1 if side == "left" else -1
    return x * f + grad.scale(I * Fraction(sign, 2))


def _derivative_table(f: TwistedElement, order: int) -> dict:
    table = {(0, 0): f}
    for total in range(1, order + 1):
        for i in range(total + 1):
            j = total - i
            if i > 0:
                table[(i, j)] = derive(table[(i - 1, j)], "a")
            else:
                table[(i, j)] = derive(table[(i, j - 1)], "abar")
    return table


def _check_polynomial(P: TwistedElement):
    if not P.is_polynomial():
        raise NonTerminating("series needs a polynomial factor (no Gaussian weight, no negative powers)")


def einv_power_coefficient(n: int) -> TwistedElement:
    """(theta e^{-1}/2)^n, truncated."""
    return (THETA * det_inv()).scale(Fraction(1, 2)) ** n


def star_series(P: TwistedElement, f: TwistedElement, side: str = "left") -> TwistedElement:
    """P * f (side='left') or f * P (side='right') by the terminating series."""
    _check_polynomial(P)
    if side not in ("left", "right"):
        raise ValueError(f"side must be 'left' or 'right', not {side!r}")
    N = P.degree()
    dP = _derivative_table(P, N)
    df = _derivative_table(f, N)
    result = ZERO_ELEMENT
    for n in range(N + 1):
        inner = ZERO_ELEMENT
        for k in range(n + 1):
            c = Fraction((-1) ** (n - k), factorial(k) * factorial(n - k))
            if side == "left":
                # (d_a^k d_abar^{n-k} P) (d_abar^k d_a^{n-k} f)
                left, right = dP[(k, n - k)], df[(n - k, k)]
            else:
                left, right = df[(k, n - k)], dP[(n - k, k)]
            if left and right:
                inner = inner + (left * right).scale(c)
        if inner:
            result = result + einv_power_coefficient(n) * inner
    return result


def star(f: TwistedElement, g: TwistedElement) -> TwistedElement:
    """f * g when at least one factor is polynomial."""
    if f.is_polynomial():
        return star_series(f, g, "left")
    if g.is_polynomial():
        return star_series(g, f, "right")
    raise NonTerminating("neither factor is polynomial")


def commutator_star(P: TwistedElement, Q: TwistedElement) -> TwistedElement:
    return star(P, Q) - star(Q, P)


def anticommutator_star(P: TwistedElement, Q: TwistedElement) -> TwistedElement:
    return star(P, Q) + star(Q, P)


def moyal_constant_series(f: TwistedElement, g: TwistedElement) -> TwistedElement:
    """Constant-theta Moyal product exp((i/2) theta J^{mu nu} d_mu (x) d_nu) in the
    real chart, for polynomial f.  Independent of the (a, abar) series; used at
    w = 0 as a cross-check.
    """
    _check_polynomial(f)
    N = f.degree()
    result = ZERO_ELEMENT
    # (J^{mu nu} d_mu (x) d_nu)^n = sum_k C(n,k) (-1)^{n-k} (d1^k d2^{n-k}) (x) (d2^k d1^{n-k})
    for n in range(N + 1):
        inner = ZERO_ELEMENT
        for k in range(n + 1):
            left = f
            for _ in range(k):
                left = _D1(left)
            for _ in range(n - k):
                left = _D2(left)
            if not left:
                continue
            right = g
            for _ in range(k):
                right = _D2(right)
            for _ in range(n - k):
                right = _D1(right)
            c = Fraction((-1) ** (n - k) * factorial(n), factorial(k) * factorial(n - k))
            inner = inner + (left * right).scale(c)
        # ((i/2) theta)^n / n!
        coef = (I * Fraction(1, 2)) ** n * Number(Fraction(1, factorial(n)))
        result = result + (THETA ** n * inner).scale(coef)
    return result


# -- Hamiltonians ---------------------------------------------------------------

H_SYMBOL = ABAR * A


def _mu_operator(f: TwistedElement, sign: int) -> TwistedElement:
    x1, x2, om1, om2 = FRAME.x1, FRAME.x2, FRAME.omega1, FRAME.omega2
    theta2_over4 = (THETA * THETA).scale(Fraction(1, 4))
    te = THETA * det_inv()
    c2 = te * x1 * I - theta2_over4 * om1
    c1 = te * x2 * I - theta2_over4 * om2
    lap = _D1(_D1(f)) + _D2(_D2(f))
    body = (
        (x1 * x1 + x2 * x2) * f
        + (c2 * _D2(f) - c1 * _D1(f)).scale(sign)
        - theta2_over4 * det_inv() * det_inv() * lap
    )
    return body.scale(Fraction(1, 2))


def _einv_star_left(f: TwistedElement) -> TwistedElement:
    # e^{-1} * f = f - w (a * f) - wbar (abar * f)
    return f - OMEGA * star_gen_left("a", f) - OMEGABAR * star_gen_left("abar", f)


def _einv_star_right(f: TwistedElement) -> TwistedElement:
    return f - OMEGA * star_gen_right(f, "a") - OMEGABAR * star_gen_right(f, "abar")


def hamiltonian_left(f: TwistedElement, method: str = "series") -> TwistedElement:
    """H * f with H = abar a."""
    if method == "series":
        return star_series(H_SYMBOL, f, "left")
    if method == "mu_operator":
        return _mu_operator(f, +1)
    if method == "bracket":
        half_theta = THETA.scale(Fraction(1, 2))
        return star_gen_left("abar", star_gen_left("a", f)) + half_theta * _einv_star_left(f)
    raise ValueError(f"unknown method {method!r}")


def hamiltonian_right(f: TwistedElement, method: str = "series") -> TwistedElement:
    """f * H with H = abar a."""
    if method == "series":
        return star_series(H_SYMBOL, f, "right")
    if method == "mu_operator":
        return _mu_operator(f, -1)
    if method == "bracket":
        half_theta = THETA.scale(Fraction(1, 2))
        return star_gen_right(star_gen_right(f, "abar"), "a") + half_theta * _einv_star_right(f)
    raise ValueError(f"unknown method {method!r}")


HAMILTONIAN_METHODS = ("series", "mu_operator", "bracket")


# -- frame vector fields, associator, Jacobi -------------------------------------

def vector_field_apply(index: int, f: TwistedElement) -> TwistedElement:
    """X_a f = e_a^mu d_mu f for a in {1, 2}."""
    if index not in (1, 2):
        raise ValueError("vector field index must be 1 or 2")
    row = FRAME.e_matrix()[index - 1]
    return row[0] * _D1(f) + row[1] * _D2(f)


def leibniz_residual(index: int, f: TwistedElement, g: TwistedElement) -> TwistedElement:
    """X(f*g) - (Xf)*g - f*(Xg) for polynomial f."""
    lhs = vector_field_apply(index, star(f, g))
    rhs = star(vector_field_apply(index, f), g) + star(f, vector_field_apply(index, g))
    return lhs - rhs


def associator(f: TwistedElement, g: TwistedElement, h: TwistedElement) -> TwistedElement:
    """(f*g)*h - f*(g*h) with f, g polynomial."""
    _check_polynomial(f)
    _check_polynomial(g)
    return star(star(f, g), h) - star(f, star(g, h))


def coordinate(mu: int) -> TwistedElement:
    return (FRAME.x1, FRAME.x2)[mu - 1]


def jacobi_residuals() -> dict[tuple[int, int, int], TwistedElement]:
    """Cyclic double commutators of the coordinates for every (mu, nu, rho)."""
    out = {}
    for mu in (1, 2):
        for nu in (1, 2):
            for rho in (1, 2):
                x = {i: coordinate(i) for i in (1, 2)}
                total = (
                    commutator_star(x[mu], commutator_star(x[nu], x[rho]))
                    + commutator_star(x[rho], commutator_star(x[mu], x[nu]))
                    + commutator_star(x[nu], commutator_star(x[rho], x[mu]))
                )
                out[(mu, nu, rho)] = total
    return out


def theta_einv() -> TwistedElement:
    return THETA * det_inv()


__all__ = [
    "FRAME", "FrameData", "GENERATORS", "HAMILTONIAN_METHODS", "H_SYMBOL",
    "NonTerminating", "anticommutator_star", "associator", "commutator_star",
    "coordinate", "det", "einv_power_coefficient", "hamiltonian_left",
    "hamiltonian_right", "jacobi_residuals", "leibniz_residual",
    "moyal_constant_series", "star", "star_gen_left", "star_gen_right",
    "star_series", "star_x_general", "theta_einv", "vector_field_apply",
]
