"""Laurent-Gaussian elements truncated at first order in the twist.

An element is a finite sum of terms

    c * theta^t * a^p * abar^q * w^r * wbar^s * exp(-2 g a abar / theta)

with ``c`` exact in Q(i, sqrt 2), ``p, q, t`` any integers, ``r, s`` in {0, 1}
with ``r + s <= 1`` and ``g >= 0``.  Products that create ``r + s >= 2`` are
dropped silently; that is the whole first-order calculus.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Iterator, NamedTuple

from .scalars import I, INV_SQRT2, ONE, ZERO, Number, format_number, parse_number


class NotAUnit(ArithmeticError):
    """Raised by :func:`invert_unit` when the zeroth-order part is not invertible."""


class Monomial(NamedTuple):
    """Exponents of a term, in canonical comparison order (g, r, s, p, q)."""

    g: int = 0
    r: int = 0
    s: int = 0
    p: int = 0
    q: int = 0

    @property
    def order(self) -> int:
        return self.r + self.s

    def mirror(self) -> Monomial:
        return Monomial(self.g, self.s, self.r, self.q, self.p)


class Coefficient(NamedTuple):
    value: Number
    theta_power: int


# a term key is (monomial, theta power)
Key = tuple  # (Monomial, int)


def _mono_mul(m1: Monomial, m2: Monomial) -> Monomial | None:
    r = m1.r + m2.r
    s = m1.s + m2.s
    if r + s > 1:
        return None
    return Monomial(m1.g + m2.g, r, s, m1.p + m2.p, m1.q + m2.q)


class TwistedElement:
    """Immutable canonical sum of terms.

    ``terms`` maps ``(Monomial, theta_power)`` to a nonzero :class:`Number`.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: dict | Iterable = ()):
        items = terms.items() if isinstance(terms, dict) else terms
        acc: dict = {}
        for (mono, t), c in items:
            if not isinstance(mono, Monomial):
                mono = Monomial(*mono)
            if mono.r + mono.s > 1 or mono.r < 0 or mono.s < 0:
                continue
            if mono.g < 0:
                raise ValueError("Gaussian weight must be nonnegative")
            c = Number.coerce(c)
            key = (mono, t)
            acc[key] = acc[key] + c if key in acc else c
        self._terms = {k: acc[k] for k in sorted(acc) if not acc[k].is_zero()}
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict) -> TwistedElement:
        # terms already canonical apart from ordering
        obj = cls.__new__(cls)
        obj._terms = {k: terms[k] for k in sorted(terms)}
        obj._hash = None
        return obj

    # -- constructors -------------------------------------------------------

    @classmethod
    def term(cls, c=1, *, p=0, q=0, r=0, s=0, g=0, t=0) -> TwistedElement:
        return cls({(Monomial(g, r, s, p, q), t): Number.coerce(c)})

    @classmethod
    def const(cls, c) -> TwistedElement:
        return cls.term(c)

    # -- access ---------------------------------------------------------------

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self) -> Iterator:
        return iter(self._terms.items())

    def coefficients(self) -> Iterator[tuple[Monomial, Coefficient]]:
        for (mono, t), c in self._terms.items():
            yield mono, Coefficient(c, t)

    def __len__(self):
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def coefficient(self, *, p=0, q=0, r=0, s=0, g=0, t=0) -> Number:
        return self._terms.get((Monomial(g, r, s, p, q), t), ZERO)

    def weights(self) -> set[int]:
        return {mono.g for mono, _ in self._terms}

    def is_polynomial(self) -> bool:
        return all(m.g == 0 and m.p >= 0 and m.q >= 0 for m, _ in self._terms)

    def degree(self) -> int:
        """Total degree in (a, abar); -inf-free: 0 for the zero element."""
        return max((m.p + m.q for m, _ in self._terms), default=0)

    # -- arithmetic -----------------------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        acc = dict(self._terms)
        for k, c in other._terms.items():
            if k in acc:
                v = acc[k] + c
                if v.is_zero():
                    del acc[k]
                else:
                    acc[k] = v
            else:
                acc[k] = c
        return TwistedElement._raw(acc)

    __radd__ = __add__

    def __neg__(self):
        return TwistedElement._raw({k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> TwistedElement:
        c = Number.coerce(c)
        if c.is_zero():
            return ZERO_ELEMENT
        return TwistedElement._raw({k: v * c for k, v in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, Number)):
            return self.scale(other)
        if not isinstance(other, TwistedElement):
            return NotImplemented
        return mul_pointwise(self, other)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, Number)):
            return self.scale(other)
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction, Number)):
            return self.scale(Number.coerce(other).inverse())
        return NotImplemented

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return invert_unit(self) ** (-n)
        result = ONE_ELEMENT
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- comparison -----------------------------------------------------------

    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(tuple(self._terms.items()))
        return self._hash

    def __repr__(self):
        return f"TwistedElement({format_element(self)!r})"

    def __str__(self):
        return format_element(self)


def _coerce(x):
    if isinstance(x, TwistedElement):
        return x
    if isinstance(x, (int, Fraction, Number)):
        return TwistedElement.const(x)
    return NotImplemented


ZERO_ELEMENT = TwistedElement()
ONE_ELEMENT = TwistedElement.const(1)

# generators
A = TwistedElement.term(p=1)
ABAR = TwistedElement.term(q=1)
OMEGA = TwistedElement.term(r=1)
OMEGABAR = TwistedElement.term(s=1)
THETA = TwistedElement.term(t=1)


def gaussian(g: int = 1) -> TwistedElement:
    """exp(-2 g a abar / theta)."""
    return TwistedElement.term(g=g)


def det_inv() -> TwistedElement:
    """e^{-1} = det(e_a^mu) = 1 - a w - abar wbar at first order."""
    return ONE_ELEMENT - A * OMEGA - ABAR * OMEGABAR


def det() -> TwistedElement:
    """e = det(e_mu^a) = 1 + a w + abar wbar at first order."""
    return ONE_ELEMENT + A * OMEGA + ABAR * OMEGABAR


# -- operations -----------------------------------------------------------------

def add(f: TwistedElement, g: TwistedElement) -> TwistedElement:
    return f + g


def mul_pointwise(f: TwistedElement, g: TwistedElement) -> TwistedElement:
    acc: dict = {}
    for (m1, t1), c1 in f._terms.items():
        for (m2, t2), c2 in g._terms.items():
            m = _mono_mul(m1, m2)
            if m is None:
                continue
            key = (m, t1 + t2)
            c = c1 * c2
            if key in acc:
                acc[key] = acc[key] + c
            else:
                acc[key] = c
    return TwistedElement._raw({k: v for k, v in acc.items() if not v.is_zero()})


def derive(f: TwistedElement, var: str) -> TwistedElement:
    """Exact partial derivative in ``'a'`` or ``'abar'``.

    The weight exp(-2 g a abar/theta) contributes -(2g/theta) times the
    conjugate variable.
    """
    if var not in ("a", "abar"):
        raise ValueError(f"unknown variable {var!r}")
    acc: dict = {}

    def put(key, c):
        if key in acc:
            acc[key] = acc[key] + c
        else:
            acc[key] = c

    for (m, t), c in f._terms.items():
        if var == "a":
            if m.p:
                put((m._replace(p=m.p - 1), t), c * m.p)
            if m.g:
                put((m._replace(q=m.q + 1), t - 1), c * (-2 * m.g))
        else:
            if m.q:
                put((m._replace(q=m.q - 1), t), c * m.q)
            if m.g:
                put((m._replace(p=m.p + 1), t - 1), c * (-2 * m.g))
    return TwistedElement._raw({k: v for k, v in acc.items() if not v.is_zero()})


def derive_n(f: TwistedElement, na: int = 0, nabar: int = 0) -> TwistedElement:
    for _ in range(na):
        f = derive(f, "a")
    for _ in range(nabar):
        f = derive(f, "abar")
    return f


def limit_omega_zero(f: TwistedElement) -> TwistedElement:
    return TwistedElement._raw({k: c for k, c in f._terms.items() if k[0].order == 0})


def first_order_part(f: TwistedElement) -> TwistedElement:
    return TwistedElement._raw({k: c for k, c in f._terms.items() if k[0].order == 1})


def mirror(f: TwistedElement) -> TwistedElement:
    """Swap a <-> abar and w <-> wbar; coefficients untouched."""
    return TwistedElement({(m.mirror(), t): c for (m, t), c in f._terms.items()})


def shift_weight(f: TwistedElement, dg: int) -> TwistedElement:
    """Multiply by exp(-2 dg a abar/theta); dg may be negative if every term allows it."""
    return TwistedElement({(m._replace(g=m.g + dg), t): c for (m, t), c in f._terms.items()})


def invert_unit(f: TwistedElement) -> TwistedElement:
    """First-order Laurent inverse of c*M*(1 + h): c^-1 M^-1 (1 - h)."""
    lead = limit_omega_zero(f)
    if len(lead) != 1:
        raise NotAUnit(f"zeroth-order part has {len(lead)} terms: {format_element(lead)}")
    (m, t), c = next(lead.items())
    if m.g != 0:
        raise NotAUnit("zeroth-order part carries a Gaussian weight")
    inv_lead = TwistedElement.term(c.inverse(), p=-m.p, q=-m.q, t=-t)
    h = first_order_part(f) * inv_lead
    return inv_lead * (ONE_ELEMENT - h)


class Derivation(NamedTuple):
    """A first-order operator ``ca * d/da + cb * d/dabar`` with scalar coefficients."""

    ca: Number
    cb: Number

    def __call__(self, f: TwistedElement) -> TwistedElement:
        out = ZERO_ELEMENT
        if self.ca:
            out = out + derive(f, "a").scale(self.ca)
        if self.cb:
            out = out + derive(f, "abar").scale(self.cb)
        return out


def coord_images():
    """(x1, x2, d1, d2) in the (a, abar) chart.

    x1 = (a + abar)/sqrt2, x2 = (a - abar)/(i sqrt2);
    d1 = (d_a + d_abar)/sqrt2, d2 = i (d_a - d_abar)/sqrt2.
    """
    x1 = (A + ABAR).scale(INV_SQRT2)
    x2 = (A - ABAR).scale(INV_SQRT2 * I.inverse())
    d1 = Derivation(INV_SQRT2, INV_SQRT2)
    d2 = Derivation(I * INV_SQRT2, -(I * INV_SQRT2))
    return x1, x2, d1, d2


# -- text rendering and serialization -----------------------------------------

def format_term(mono: Monomial, t: int, c: Number) -> str:
    pieces = [format_number(c)]
    if t:
        pieces.append(f"θ^{t}")
    for name, e in (("a", mono.p), ("abar", mono.q), ("w", mono.r),
                    ("wbar", mono.s), ("G", mono.g)):
        if e:
            pieces.append(f"{name}^{e}")
    return " ".join(pieces)


def format_element(f: TwistedElement) -> str:
    if f.is_zero():
        return "0"
    return " + ".join(format_term(m, t, c) for (m, t), c in f.items())


_TERM_FIELDS = {"a": "p", "abar": "q", "w": "r", "wbar": "s", "G": "g",
                "θ": "t", "theta": "t"}
_FACTOR = re.compile(r"^(a|abar|wbar|w|G|θ|theta)(?:\^(-?\d+))?$")


def _split_terms(text: str) -> list[str]:
    out, depth, cur = [], 0, []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if depth == 0 and text.startswith(" + ", i):
            out.append("".join(cur))
            cur = []
            i += 3
            continue
        cur.append(ch)
        i += 1
    out.append("".join(cur))
    return [s.strip() for s in out if s.strip()]


def parse_element(text: str) -> TwistedElement:
    """Inverse of :func:`format_element`."""
    text = text.strip()
    if text in ("", "0"):
        return ZERO_ELEMENT
    terms = []
    for chunk in _split_terms(text):
        if chunk.startswith("("):
            end = chunk.index(")") + 1
            coef_text, rest = chunk[:end], chunk[end:]
        else:
            coef_text, _, rest = chunk.partition(" ")
        exps = dict(p=0, q=0, r=0, s=0, g=0, t=0)
        for factor in rest.split():
            m = _FACTOR.match(factor)
            if not m:
                raise ValueError(f"cannot parse factor {factor!r}")
            exps[_TERM_FIELDS[m.group(1)]] += int(m.group(2) or 1)
        mono = Monomial(exps["g"], exps["r"], exps["s"], exps["p"], exps["q"])
        terms.append(((mono, exps["t"]), parse_number(coef_text)))
    return TwistedElement(terms)


def to_record(f: TwistedElement) -> list[dict]:
    """Lossless structured form: a list of plain records."""
    return [
        {
            "g": m.g, "r": m.r, "s": m.s, "p": m.p, "q": m.q, "theta": t,
            "coef": [str(x) for x in c.parts],
        }
        for (m, t), c in f.items()
    ]


def from_record(records: list[dict]) -> TwistedElement:
    return TwistedElement(
        ((Monomial(r["g"], r["r"], r["s"], r["p"], r["q"]), r["theta"]),
         Number(*(Fraction(x) for x in r["coef"])))
        for r in records
    )
