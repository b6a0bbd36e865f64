"""Exact arithmetic in the field of rational functions in p^(1/2), q^(1/2).

A :class:`Scalar` is stored as ``P^a * Q^b * num / den`` where ``P = p^(1/2)``,
``Q = q^(1/2)``, ``num`` and ``den`` are integer polynomials in ``P, Q`` and
``(a, b)`` is a (possibly negative) monomial shift.  Every value is kept in a
canonical form, so equality is structural:

* ``gcd(num, den) = 1`` (including the integer content),
* neither ``num`` nor ``den`` is divisible by ``P`` or ``Q``,
* the leading coefficient of ``den`` (graded-lex, ``P`` before ``Q``) is positive.

Exponent pairs are always the doubled exponents of ``p`` and ``q``.  The
polynomial arithmetic and gcds are delegated to FLINT.
"""

from __future__ import annotations

import re
from fractions import Fraction
from numbers import Integral, Rational
from typing import Dict, Iterable, Optional, Tuple, Union

import flint

from .errors import DenominatorVanishes, DivisionByZero, DomainError

__all__ = [
    "Scalar",
    "ZERO",
    "ONE",
    "P_HALF",
    "Q_HALF",
    "P",
    "Q",
    "as_scalar",
    "specialize",
    "poincare_a",
    "poincare_b",
    "p_power",
    "q_power",
    "q_integer",
    "prod_scalars",
    "sum_scalars",
]

_CTX = flint.fmpz_mpoly_ctx.get(("P", "Q"), "deglex")
_ZERO_POLY = _CTX.constant(0)
_ONE_POLY = _CTX.constant(1)

Exponent = Tuple[int, int]
ScalarLike = Union["Scalar", int, Fraction]


def _monomial(a: int, b: int):
    return _CTX.term(exp_vec=(a, b), coeff=1)


def _low_exponents(poly) -> Exponent:
    monoms = poly.monoms()
    return min(m[0] for m in monoms), min(m[1] for m in monoms)


def _strip_monomial(poly) -> Tuple[object, int, int]:
    a, b = _low_exponents(poly)
    a, b = int(a), int(b)
    if a or b:
        poly = poly / _monomial(a, b)
    return poly, a, b


class Scalar:
    """Immutable element of Q(p^(1/2), q^(1/2)) in canonical form."""

    __slots__ = ("_a", "_b", "_num", "_den", "_hash")

    def __init__(self, value: Union[int, Fraction, "Scalar"] = 0):
        if isinstance(value, Scalar):
            self._set(value._a, value._b, value._num, value._den)
            return
        if isinstance(value, Integral):
            self._set(0, 0, _CTX.constant(int(value)), _ONE_POLY)
            self._canonicalize()
            return
        if isinstance(value, Rational):
            value = Fraction(value)
            self._set(0, 0, _CTX.constant(value.numerator),
                      _CTX.constant(value.denominator))
            self._canonicalize()
            return
        raise TypeError(f"cannot build a Scalar from {type(value).__name__}")

    def _set(self, a, b, num, den):
        self._a = a
        self._b = b
        self._num = num
        self._den = den
        self._hash = None

    @classmethod
    def _build(cls, a: int, b: int, num, den=None) -> "Scalar":
        obj = cls.__new__(cls)
        obj._set(a, b, num, _ONE_POLY if den is None else den)
        obj._canonicalize()
        return obj

    def _canonicalize(self) -> None:
        num, den = self._num, self._den
        if den.is_zero():
            raise DivisionByZero("zero denominator")
        if num.is_zero():
            self._set(0, 0, _ZERO_POLY, _ONE_POLY)
            return
        a, b = self._a, self._b
        if not den.is_one():
            g = num.gcd(den)
            if not g.is_one():
                num = num / g
                den = den / g
            den, da, db = _strip_monomial(den)
            a -= da
            b -= db
            if den.leading_coefficient() < 0:
                num, den = -num, -den
        num, na, nb = _strip_monomial(num)
        self._set(a + na, b + nb, num, den)

    # -- constructors -------------------------------------------------
    @classmethod
    def monomial(cls, a: int, b: int, coeff: Union[int, Fraction] = 1) -> "Scalar":
        """``coeff * p^(a/2) * q^(b/2)``."""
        coeff = Fraction(coeff)
        if coeff == 0:
            return ZERO
        return cls._build(a, b, _CTX.constant(coeff.numerator),
                          _CTX.constant(coeff.denominator))

    @classmethod
    def from_terms(cls, terms: Dict[Exponent, Union[int, Fraction]]) -> "Scalar":
        """Laurent polynomial from a mapping ``(a, b) -> coefficient``."""
        terms = {k: Fraction(v) for k, v in terms.items() if v != 0}
        if not terms:
            return ZERO
        lcm = 1
        for v in terms.values():
            lcm = lcm * v.denominator // _gcd(lcm, v.denominator)
        amin = min(k[0] for k in terms)
        bmin = min(k[1] for k in terms)
        num = _CTX.from_dict(
            {(k[0] - amin, k[1] - bmin): int(v * lcm) for k, v in terms.items()}
        )
        return cls._build(amin, bmin, num, _CTX.constant(lcm))

    # -- inspection ---------------------------------------------------
    @property
    def numerator_terms(self) -> Dict[Exponent, int]:
        """Terms of ``P^a Q^b num`` as a Laurent polynomial."""
        return {(int(e[0]) + self._a, int(e[1]) + self._b): int(c)
                for e, c in self._num.to_dict().items()}

    @property
    def denominator_terms(self) -> Dict[Exponent, int]:
        return {(int(e[0]), int(e[1])): int(c) for e, c in self._den.to_dict().items()}

    def is_zero(self) -> bool:
        return self._num.is_zero()

    def is_polynomial(self) -> bool:
        """True when the denominator is 1 (a Laurent polynomial)."""
        return self._den.is_one()

    def is_constant(self) -> bool:
        return self._den.is_constant() and self._num.is_constant() and \
            (self._num.is_zero() or (self._a == 0 and self._b == 0))

    def to_fraction(self) -> Fraction:
        if not self.is_constant():
            raise DomainError(f"{self} is not a constant")
        return Fraction(int(self._num.leading_coefficient()) if not self._num.is_zero() else 0,
                        int(self._den.leading_coefficient()))

    def has_half_powers(self) -> Tuple[bool, bool]:
        """Whether odd exponents of ``p^(1/2)`` / ``q^(1/2)`` occur."""
        odd_p = self._a % 2 != 0 or any(e[0] % 2 for e in self._num.monoms())
        odd_q = self._b % 2 != 0 or any(e[1] % 2 for e in self._num.monoms())
        odd_p = odd_p or any(e[0] % 2 for e in self._den.monoms())
        odd_q = odd_q or any(e[1] % 2 for e in self._den.monoms())
        return odd_p, odd_q

    # -- arithmetic ---------------------------------------------------
    def __add__(self, other: ScalarLike) -> "Scalar":
        other = as_scalar(other)
        if other._num.is_zero():
            return self
        if self._num.is_zero():
            return other
        a = min(self._a, other._a)
        b = min(self._b, other._b)
        n1 = self._num
        if self._a != a or self._b != b:
            n1 = n1 * _monomial(self._a - a, self._b - b)
        n2 = other._num
        if other._a != a or other._b != b:
            n2 = n2 * _monomial(other._a - a, other._b - b)
        if self._den == other._den:
            return Scalar._build(a, b, n1 + n2, self._den)
        return Scalar._build(a, b, n1 * other._den + n2 * self._den,
                             self._den * other._den)

    __radd__ = __add__

    def __neg__(self) -> "Scalar":
        obj = Scalar.__new__(Scalar)
        obj._set(self._a, self._b, -self._num, self._den)
        return obj

    def __sub__(self, other: ScalarLike) -> "Scalar":
        return self + (-as_scalar(other))

    def __rsub__(self, other: ScalarLike) -> "Scalar":
        return as_scalar(other) + (-self)

    def __mul__(self, other: ScalarLike) -> "Scalar":
        other = as_scalar(other)
        if self._num.is_zero() or other._num.is_zero():
            return ZERO
        a = self._a + other._a
        b = self._b + other._b
        if self._den.is_one() and other._den.is_one():
            obj = Scalar.__new__(Scalar)
            obj._set(a, b, self._num * other._num, _ONE_POLY)
            return obj
        return Scalar._build(a, b, self._num * other._num, self._den * other._den)

    __rmul__ = __mul__

    def inv(self) -> "Scalar":
        if self._num.is_zero():
            raise DivisionByZero("inverse of zero")
        return Scalar._build(-self._a, -self._b, self._den, self._num)

    def __truediv__(self, other: ScalarLike) -> "Scalar":
        return self * as_scalar(other).inv()

    def __rtruediv__(self, other: ScalarLike) -> "Scalar":
        return as_scalar(other) * self.inv()

    def __pow__(self, k: int) -> "Scalar":
        if not isinstance(k, Integral):
            raise TypeError("only integer powers are supported")
        if k < 0:
            return self.inv() ** (-k)
        if k == 0:
            return ONE
        obj = Scalar.__new__(Scalar)
        obj._set(self._a * k, self._b * k, self._num ** k, self._den ** k)
        return obj

    def bar(self) -> "Scalar":
        """Substitute ``p^(1/2) -> p^(-1/2)`` and ``q^(1/2) -> q^(-1/2)``."""
        if self._num.is_zero():
            return ZERO
        n_rev, (na, nb) = _reverse(self._num)
        d_rev, (da, db) = _reverse(self._den)
        return Scalar._build(-self._a - na + da, -self._b - nb + db, n_rev, d_rev)

    # -- comparison ---------------------------------------------------
    def __eq__(self, other) -> bool:
        if not isinstance(other, Scalar):
            if isinstance(other, (Integral, Rational)):
                other = Scalar(other)
            else:
                return NotImplemented
        return (self._a == other._a and self._b == other._b
                and self._num == other._num and self._den == other._den)

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self._a, self._b,
                               tuple(sorted(self.numerator_terms.items())),
                               tuple(sorted(self.denominator_terms.items()))))
        return self._hash

    def __bool__(self) -> bool:
        return not self._num.is_zero()

    # -- evaluation ---------------------------------------------------
    def specialize(self, p_half=None, q_half=None, *, p=None, q=None) -> "Union[Fraction, Scalar]":
        """Substitute rational values for the parameters.

        Give either the half-power value (``p_half``) or the full value
        (``p``) for each parameter; a full value is only accepted when only
        integer powers of that parameter occur.  If both parameters are
        substituted the result is a :class:`~fractions.Fraction`, otherwise a
        :class:`Scalar` in the remaining parameter.
        """
        if p_half is not None and p is not None or q_half is not None and q is not None:
            raise DomainError("give either the half value or the full value, not both")
        odd_p, odd_q = self.has_half_powers()
        if p is not None and odd_p:
            raise DomainError("odd powers of p^(1/2) present; give p_half instead")
        if q is not None and odd_q:
            raise DomainError("odd powers of q^(1/2) present; give q_half instead")
        pv = _half_value(p_half, p)
        qv = _half_value(q_half, q)
        num = _eval_terms(self.numerator_terms, pv, qv)
        den = _eval_terms(self.denominator_terms, pv, qv)
        if isinstance(den, Fraction):
            if den == 0:
                raise DenominatorVanishes(f"denominator of {self} vanishes")
            return num / den
        if den.is_zero():
            raise DenominatorVanishes(f"denominator of {self} vanishes")
        return as_scalar(num) / den

    # -- printing -----------------------------------------------------
    def __str__(self) -> str:
        if self._num.is_zero():
            return "0"
        pa, pb = max(self._a, 0), max(self._b, 0)
        da, db = max(-self._a, 0), max(-self._b, 0)
        num = {(int(e[0]) + pa, int(e[1]) + pb): int(c) for e, c in self._num.to_dict().items()}
        den = {(int(e[0]) + da, int(e[1]) + db): int(c) for e, c in self._den.to_dict().items()}
        if den == {(0, 0): 1}:
            return _poly_str(num)
        return f"({_poly_str(num)})/({_poly_str(den)})"

    def __repr__(self) -> str:
        return f"Scalar('{self}')"

    @classmethod
    def parse(cls, text: str) -> "Scalar":
        """Inverse of :meth:`__str__`."""
        text = text.strip().replace(" ", "")
        m = re.fullmatch(r"\((.*)\)/\((.*)\)", text)
        if m:
            return _parse_poly(m.group(1)) / _parse_poly(m.group(2))
        return _parse_poly(text)


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return abs(a)


def _reverse(poly):
    d = poly.to_dict()
    dp = int(max(e[0] for e in d))
    dq = int(max(e[1] for e in d))
    return _CTX.from_dict({(dp - e[0], dq - e[1]): c for e, c in d.items()}), (dp, dq)


def _half_value(half, full):
    if half is not None:
        return ("half", Fraction(half))
    if full is not None:
        return ("full", Fraction(full))
    return None


def _power(spec, exponent: int):
    kind, value = spec
    if kind == "full":
        exponent //= 2
    if exponent < 0:
        if value == 0:
            raise DenominatorVanishes("negative power of a parameter specialized to 0")
        return Fraction(1) / value ** (-exponent)
    return value ** exponent


def _eval_terms(terms: Dict[Exponent, int], pv, qv):
    if pv is not None and qv is not None:
        total = Fraction(0)
        for (a, b), c in terms.items():
            total += c * _power(pv, a) * _power(qv, b)
        return total
    out: Dict[Exponent, Fraction] = {}
    for (a, b), c in terms.items():
        if pv is not None:
            key, val = (0, b), c * _power(pv, a)
        elif qv is not None:
            key, val = (a, 0), c * _power(qv, b)
        else:
            key, val = (a, b), Fraction(c)
        out[key] = out.get(key, 0) + val
    return Scalar.from_terms(out)


def _mono_str(a: int, b: int) -> str:
    parts = []
    for sym, e in (("p", a), ("q", b)):
        if e == 0:
            continue
        parts.append(sym if e == 2 else f"{sym}^({e}/2)")
    return "*".join(parts)


def _poly_str(terms: Dict[Exponent, int]) -> str:
    out = []
    for (a, b) in sorted(terms, key=lambda e: (e[0] + e[1], e[0]), reverse=True):
        c = terms[(a, b)]
        mono = _mono_str(a, b)
        if not mono:
            term = str(c)
        elif c == 1:
            term = mono
        elif c == -1:
            term = "-" + mono
        else:
            term = f"{c}*{mono}"
        if out and not term.startswith("-"):
            term = "+" + term
        out.append(term)
    return "".join(out) or "0"


_TERM_RE = re.compile(
    r"([+-]?)(\d+)?\*?"
    r"(?:p(?:\^\((-?\d+)/2\))?(?![a-z]))?\*?"
    r"(?:q(?:\^\((-?\d+)/2\))?)?"
)


def _parse_poly(text: str) -> Scalar:
    pos = 0
    terms: Dict[Exponent, int] = {}
    while pos < len(text):
        m = _TERM_RE.match(text, pos)
        if m is None or m.end() == pos:
            raise DomainError(f"cannot parse scalar {text!r} at offset {pos}")
        sign, coeff, pexp, qexp = m.groups()
        seg = m.group(0)
        has_p = "p" in seg
        has_q = "q" in seg
        if coeff is None and not (has_p or has_q):
            raise DomainError(f"cannot parse scalar {text!r} at offset {pos}")
        c = int(coeff) if coeff is not None else 1
        if sign == "-":
            c = -c
        a = (int(pexp) if pexp is not None else 2) if has_p else 0
        b = (int(qexp) if qexp is not None else 2) if has_q else 0
        terms[(a, b)] = terms.get((a, b), 0) + c
        pos = m.end()
    return Scalar.from_terms(terms)


def as_scalar(x: ScalarLike) -> Scalar:
    if isinstance(x, Scalar):
        return x
    return Scalar(x)


def specialize(x: ScalarLike, p_half=None, q_half=None, *, p=None, q=None):
    """Module-level form of :meth:`Scalar.specialize`."""
    return as_scalar(x).specialize(p_half, q_half, p=p, q=q)


ZERO = Scalar.__new__(Scalar)
ZERO._set(0, 0, _ZERO_POLY, _ONE_POLY)
ONE = Scalar.__new__(Scalar)
ONE._set(0, 0, _ONE_POLY, _ONE_POLY)
P_HALF = Scalar.monomial(1, 0)
Q_HALF = Scalar.monomial(0, 1)
P = Scalar.monomial(2, 0)
Q = Scalar.monomial(0, 2)


def q_power(k: int) -> Scalar:
    return Scalar.monomial(0, 2 * k)


def p_power(k: int) -> Scalar:
    return Scalar.monomial(2 * k, 0)


def q_integer(k: int) -> Scalar:
    """The q-number ``(1 - q^k) / (1 - q) = 1 + q + ... + q^(k-1)`` for k >= 0."""
    return Scalar.from_terms({(0, 2 * i): 1 for i in range(k)})


def poincare_a(n: int) -> Scalar:
    """Poincare polynomial of S_n, ``(q;q)_n / (1-q)^n``."""
    if n < 1:
        raise DomainError("n must be positive")
    out = ONE
    for k in range(1, n + 1):
        out = out * q_integer(k)
    return out


def poincare_b(n: int) -> Scalar:
    """Two-parameter Poincare polynomial of the hyperoctahedral group."""
    out = poincare_a(n)
    for i in range(n):
        out = out * (ONE + P * q_power(i))
    return out


def prod_scalars(factors: Iterable[ScalarLike]) -> Scalar:
    out = ONE
    for f in factors:
        out = out * f
    return out


def sum_scalars(terms: Iterable[ScalarLike]) -> Scalar:
    out = ZERO
    for t in terms:
        out = out + t
    return out
