"""Floating-point evaluation and independent numeric star products.

Two numeric routes cross-check the symbolic engine:

* ``star_quadrature``: the integral form of the product, integrated with a
  tensor Gauss-Hermite rule whose weights absorb the Gaussians of both
  factors.  The oscillatory kernel is separable in (y1, z2) and (y2, z1), so
  the 4D sum is done as two matrix products instead of on an N^4 grid.
* ``plane_wave_check``: the bi-differential exponential summed term by term on
  plane waves against the closed phase.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from math import factorial

import numpy as np
from numpy.polynomial.hermite import hermgauss

from .algebra import TwistedElement

SQRT2 = math.sqrt(2.0)


class DivisionAtPole(ZeroDivisionError):
    pass


class NonIntegrable(ValueError):
    pass


class PoleOnGrid(ZeroDivisionError):
    pass


@dataclass(frozen=True)
class NumericPoint:
    """Values for a, abar, theta, w, wbar.

    ``independent`` marks points where abar is not the conjugate of a (pure
    algebra checks); real points come from :meth:`from_real`.
    """

    a: complex
    abar: complex
    theta: float = 1.0
    omega: complex = 0j
    omegabar: complex = 0j
    independent: bool = False

    @classmethod
    def from_real(cls, x1: float, x2: float, theta: float = 1.0, omega: complex = 0j) -> NumericPoint:
        a = complex(x1, x2) / SQRT2
        return cls(a, a.conjugate(), theta, complex(omega), complex(omega).conjugate())

    @property
    def x(self) -> tuple[float, float]:
        x1 = (self.a + self.abar) / SQRT2
        x2 = (self.a - self.abar) / (1j * SQRT2)
        return (x1.real, x2.real)

    def det_inv(self) -> complex:
        return 1 - self.a * self.omega - self.abar * self.omegabar

    def det(self) -> complex:
        return 1 + self.a * self.omega + self.abar * self.omegabar


@dataclass(frozen=True)
class NumericConfig:
    theta_val: float = 1.0
    omega_val: complex = 0j
    omegabar_val: complex | None = None
    quadrature_nodes: int = 48
    series_terms: int = 30
    kernel: str = "product"

    def __post_init__(self):
        if self.theta_val <= 0:
            raise ValueError("theta must be positive")
        if self.omegabar_val is None:
            object.__setattr__(self, "omegabar_val", complex(self.omega_val).conjugate())
        elif abs(complex(self.omegabar_val) - complex(self.omega_val).conjugate()) > 1e-15:
            raise ValueError("omegabar must be the complex conjugate of omega")
        if self.quadrature_nodes < 8:
            raise ValueError("quadrature_nodes must be >= 8")
        if self.series_terms < 1:
            raise ValueError("series_terms must be >= 1")
        if self.kernel not in ("product", "printed"):
            raise ValueError("kernel must be 'product' or 'printed'")

    def point(self, x1: float, x2: float) -> NumericPoint:
        return NumericPoint.from_real(x1, x2, self.theta_val, self.omega_val)


def _term_values(f: TwistedElement, a, abar, theta, omega, omegabar, weight_shift=0):
    out = 0j
    aa = a * abar
    for (m, t), c in f.items():
        if (m.p < 0 and np.any(a == 0)) or (m.q < 0 and np.any(abar == 0)):
            raise DivisionAtPole(f"negative power of a vanishing variable in {m}")
        v = complex(c) * theta ** t
        term = v * a ** m.p * abar ** m.q
        if m.r:
            term = term * omega
        if m.s:
            term = term * omegabar
        g = m.g - weight_shift
        if g:
            term = term * np.exp(-2.0 * g * aa / theta)
        out = out + term
    return out


def evaluate(f: TwistedElement, at: NumericPoint, norm_tag: tuple[int, int] | None = None) -> complex:
    """Numeric value of ``f`` at a point; ``norm_tag`` (m, n) applies (m! n! theta^(m+n))^(-1/2)."""
    value = complex(_term_values(f, at.a, at.abar, at.theta, at.omega, at.omegabar))
    if norm_tag is not None:
        m, n = norm_tag
        value /= math.sqrt(factorial(m) * factorial(n) * at.theta ** (m + n))
    return value


def evaluate_state(state, at: NumericPoint) -> complex:
    return evaluate(state.body, at, state.norm_tag)


def _min_weight(f: TwistedElement) -> int:
    weights = f.weights()
    if not weights or min(weights) < 1:
        raise NonIntegrable("every term needs a Gaussian weight g >= 1")
    return min(weights)


def star_quadrature(f: TwistedElement, g: TwistedElement, at: NumericPoint,
                    cfg: NumericConfig | None = None) -> complex:
    """(f * g)(x) from the integral form

        (e/(pi theta))^2 int d2y d2z f(y) g(z) exp(s (2 i e/theta)(x-y)J(x-z))

    with e frozen at x.  ``cfg.kernel == 'printed'`` uses s = -1 exactly as
    printed; the default ``'product'`` uses s = +1, the orientation whose
    plane-wave phase matches the series product.
    """
    cfg = cfg or NumericConfig(theta_val=at.theta, omega_val=at.omega)
    if f.is_zero() or g.is_zero():
        return 0j
    gf, gg = _min_weight(f), _min_weight(g)
    theta = at.theta
    t, w = hermgauss(cfg.quadrature_nodes)
    x1, x2 = at.x
    e = at.det()

    def grid(h: TwistedElement, gmin: int):
        scale = math.sqrt(theta / gmin)
        c = t * scale
        Y1, Y2 = np.meshgrid(c, c, indexing="ij")
        a = (Y1 + 1j * Y2) / SQRT2
        try:
            vals = _term_values(h, a, np.conj(a), theta, at.omega, at.omegabar, gmin)
        except DivisionAtPole as exc:
            raise PoleOnGrid(str(exc)) from exc
        vals = np.broadcast_to(vals, Y1.shape)
        return c, np.outer(w, w) * vals * scale * scale

    y, F = grid(f, gf)
    z, G = grid(g, gg)
    sign = 1.0 if cfg.kernel == "product" else -1.0
    c = sign * 2j * e / theta
    u1, u2 = x1 - y, x2 - y
    v1, v2 = x1 - z, x2 - z
    # (x-y)J(x-z) = u1 v2 - u2 v1
    Akern = np.exp(c * np.outer(u1, v2))    # [y1, z2]
    Bkern = np.exp(-c * np.outer(u2, v1))   # [y2, z1]
    M = Bkern @ G @ Akern.T                 # [y2, y1]
    total = np.sum(F * M.T)
    return complex((e / (math.pi * theta)) ** 2 * total)


def plane_wave_check(k, q, at: NumericPoint, cfg: NumericConfig | None = None) -> tuple[complex, complex]:
    """(series_value, formula_value) for e^{ikx} * e^{iqx}.

    The series applies the n-th order bi-derivative with (theta e^{-1}/2)^n
    expanded to first order in the twist, as the symbolic engine does; the
    formula uses e^{-1} at the point, so the two differ at O(w^2).
    """
    cfg = cfg or NumericConfig(theta_val=at.theta, omega_val=at.omega)
    k1, k2 = map(float, k)
    q1, q2 = map(float, q)
    x1, x2 = at.x
    kJq = k1 * q2 - k2 * q1
    base = cmath.exp(1j * ((k1 + q1) * x1 + (k2 + q2) * x2))
    einv = at.det_inv()
    delta = 1 - einv
    phase = -0.5j * at.theta * kJq
    series = 0j
    for n in range(cfg.series_terms):
        series += phase ** n / factorial(n) * (1 - n * delta)
    formula = base * cmath.exp(phase * einv)
    return base * series, formula


@dataclass
class NumericRecord:
    expected: complex
    actual: complex
    nodes: int | None = None
    abs_error: float = field(init=False)
    rel_error: float = field(init=False)

    def __post_init__(self):
        self.abs_error = abs(self.actual - self.expected)
        self.rel_error = self.abs_error / abs(self.expected) if self.expected else self.abs_error

    def to_dict(self) -> dict:
        return {
            "expected": [self.expected.real, self.expected.imag],
            "actual": [self.actual.real, self.actual.imag],
            "abs_error": self.abs_error,
            "rel_error": self.rel_error,
            "nodes": self.nodes,
        }
