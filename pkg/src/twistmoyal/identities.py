"""Printed derivative identities for the fundamental states and for powers of
-2a/(theta e^{-1}), with their engine counterparts (iterated ``derive``)."""

from __future__ import annotations

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
    derive_n,
    det,
    mirror,
)
from .states import fundamental

STATE_FAMILIES = ("da_f00R", "dabar_f00R", "dabar_f00L", "da_f00L")
POWER_FAMILIES = ("da_power", "dabar_power")


def _inv_fact(n: int) -> Fraction:
    return Fraction(0) if n < 0 else Fraction(1, factorial(n))


def _scaled(var: TwistedElement) -> TwistedElement:
    # -2 var / theta
    return (var * TwistedElement.term(t=-1)).scale(-2)


def _right_da(k: int) -> TwistedElement:
    u = _scaled(ABAR)
    bracket = (
        (OMEGA * u ** (k - 1)).scale(k * (k - 1)) if k >= 1 else ZERO_ELEMENT
    ) + u ** k * det() ** k * (
        ONE_ELEMENT + (A * OMEGA).scale(k) - (ABAR * OMEGABAR).scale(Fraction(k, 2))
    )
    return bracket * fundamental("right").body


def _right_dabar(k: int) -> TwistedElement:
    u = _scaled(A)
    bracket = (
        (OMEGABAR * u ** (k - 1)).scale(Fraction(k * (k - 1), 2)) if k >= 1 else ZERO_ELEMENT
    ) + u ** k * det() ** k
    return bracket * fundamental("right").body


def derivative_identity_rhs(family: str, k: int, l: int | None = None) -> TwistedElement:
    """Right-hand side of the printed identity.

    State families take the order k; power families take (k, l) and describe
    d^k (-2 var/(theta e^{-1}))^l.
    """
    if k < 1:
        raise ValueError("order must be >= 1")
    if family == "da_f00R":
        return _right_da(k)
    if family == "dabar_f00R":
        return _right_dabar(k)
    if family == "dabar_f00L":
        return mirror(_right_da(k))
    if family == "da_f00L":
        return mirror(_right_dabar(k))
    if family in POWER_FAMILIES:
        if l is None or l < 0:
            raise ValueError("power families need l >= 0")
        lf = factorial(l)
        c2 = TwistedElement.term(t=-1).scale(-2)  # -2/theta
        u = _scaled(A)
        first = (OMEGA * c2 ** (k - 1) * u ** (l - k + 1)).scale(
            k * l * lf * _inv_fact(l - k + 1)) if l - k + 1 >= 0 else ZERO_ELEMENT
        second = (c2 ** k * u ** (l - k) * det() ** l).scale(
            lf * _inv_fact(l - k)) if l - k >= 0 else ZERO_ELEMENT
        out = first + second
        return out if family == "da_power" else mirror(out)
    raise ValueError(f"unknown family {family!r}")


def derivative_identity_engine(family: str, k: int, l: int | None = None) -> TwistedElement:
    """Left-hand side computed by iterated differentiation."""
    if family in STATE_FAMILIES:
        side = "right" if family.endswith("R") else "left"
        f = fundamental(side).body
        if family.startswith("dabar"):
            return derive_n(f, 0, k)
        return derive_n(f, k, 0)
    if family in POWER_FAMILIES:
        base = (A * det() * TwistedElement.term(t=-1)).scale(-2) ** l
        if family == "da_power":
            return derive_n(base, k, 0)
        return derive_n(mirror(base), 0, k)
    raise ValueError(f"unknown family {family!r}")


def derivative_identity_residual(family: str, k: int, l: int | None = None) -> TwistedElement:
    return derivative_identity_engine(family, k, l) - derivative_identity_rhs(family, k, l)
