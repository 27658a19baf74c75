"""Seeded random elements for the property suites."""

from __future__ import annotations

import random
from fractions import Fraction

from .algebra import Monomial, TwistedElement
from .scalars import Number

_ORDERS = ((0, 0), (1, 0), (0, 1))


def _coef(rng: random.Random, complex_ok: bool) -> Number:
    re = Fraction(rng.randint(-9, 9), rng.randint(1, 4))
    if re == 0:
        re = Fraction(1)
    im = Fraction(rng.randint(-3, 3), rng.randint(1, 3)) if complex_ok and rng.random() < 0.3 else 0
    return Number(re, im)


def random_element(rng: random.Random, *, max_terms: int = 4, pmin: int = 0, pmax: int = 3,
                   weights: tuple[int, ...] = (0,), theta_range: tuple[int, int] = (-1, 1),
                   complex_ok: bool = True) -> TwistedElement:
    terms = []
    for _ in range(rng.randint(1, max_terms)):
        r, s = rng.choice(_ORDERS)
        mono = Monomial(rng.choice(weights), r, s, rng.randint(pmin, pmax), rng.randint(pmin, pmax))
        terms.append(((mono, rng.randint(*theta_range)), _coef(rng, complex_ok)))
    return TwistedElement(terms)


def random_polynomial(rng: random.Random, max_terms: int = 4, max_degree: int = 3) -> TwistedElement:
    return random_element(rng, max_terms=max_terms, pmin=0, pmax=max_degree, weights=(0,))


def random_laurent(rng: random.Random, max_terms: int = 4) -> TwistedElement:
    return random_element(rng, max_terms=max_terms, pmin=-2, pmax=3, weights=(0, 1, 2))


def random_gaussian_class(rng: random.Random, max_terms: int = 3, weight: int | None = None) -> TwistedElement:
    weights = (weight,) if weight is not None else (1, 2)
    return random_element(rng, max_terms=max_terms, pmin=0, pmax=3, weights=weights)


def random_unit(rng: random.Random) -> TwistedElement:
    """Single zeroth-order monomial (g = 0) plus first-order corrections."""
    lead = random_element(rng, max_terms=1, pmin=-2, pmax=3, weights=(0,))
    lead = TwistedElement([(k, c) for k, c in lead.items() if k[0].order == 0]) or TwistedElement.const(3)
    rest = random_element(rng, max_terms=3, pmin=-2, pmax=3, weights=(0,))
    rest = TwistedElement([(k, c) for k, c in rest.items() if k[0].order == 1])
    return lead + rest
