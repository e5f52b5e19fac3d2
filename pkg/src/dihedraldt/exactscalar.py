"""Exact arithmetic in the rational function field Q(x), where x = q^(1/2).

Every coefficient that appears in the motivic generating series lives here.
Working with the half-exponent variable ``x`` rather than a formal ``q^(1/2)``
makes signs such as ``(-q^(1/2))^s`` unambiguous for odd ``s``.

A :class:`Scalar` is stored as ``x^shift * num(x) / den(x)`` with

* ``num`` a rational polynomial with nonzero constant term (or zero),
* ``den`` a primitive integer polynomial with nonzero constant term and a
  positive leading coefficient,
* ``gcd(num, den) = 1``.

This normal form makes structural equality coincide with field equality.
Polynomial arithmetic and gcds are delegated to FLINT.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational

import flint

__all__ = [
    "Scalar",
    "ScalarError",
    "PoleError",
    "NotAPolynomialError",
    "X",
    "Q",
    "ONE",
    "ZERO",
    "arith",
    "adams",
    "eval_rational",
    "clear_to_q_polynomial",
]


class ScalarError(ArithmeticError):
    """Base class for scalar arithmetic failures."""


class PoleError(ScalarError, ZeroDivisionError):
    """Raised when evaluating a scalar at one of its poles."""


class NotAPolynomialError(ScalarError, ValueError):
    """Raised when a scalar cannot be cleared to an integer polynomial in q."""


_QONE = flint.fmpq_poly([1])
_ZONE = flint.fmpz_poly([1])


def _valuation(poly) -> int:
    for i, c in enumerate(poly.coeffs()):
        if c != 0:
            return i
    raise ValueError("valuation of zero polynomial")


def _to_fmpq(c) -> flint.fmpq:
    if isinstance(c, flint.fmpq):
        return c
    if isinstance(c, int):
        return flint.fmpq(c)
    if isinstance(c, Rational):
        return flint.fmpq(c.numerator, c.denominator)
    raise TypeError(f"cannot convert {type(c).__name__} to an exact rational")


def _frac(c: flint.fmpq) -> Fraction:
    return Fraction(int(c.p), int(c.q))


def _inflate(poly, n: int):
    if n == 1:
        return poly
    cs = poly.coeffs()
    out = [0] * ((len(cs) - 1) * n + 1)
    for i, c in enumerate(cs):
        out[i * n] = c
    return type(poly)(out)


class Scalar:
    """Element of Q(x) in canonical form; immutable."""

    __slots__ = ("_num", "_den", "_shift", "_hash")

    def __init__(self, value=0):
        if isinstance(value, Scalar):
            self._num, self._den, self._shift = value._num, value._den, value._shift
        else:
            c = _to_fmpq(value)
            self._num = flint.fmpq_poly([c]) if c != 0 else flint.fmpq_poly([])
            self._den = _ZONE
            self._shift = 0
        self._hash = None

    @classmethod
    def _raw(cls, num, den, shift) -> "Scalar":
        obj = cls.__new__(cls)
        obj._num, obj._den, obj._shift, obj._hash = num, den, shift, None
        return obj

    @classmethod
    def _normalized(cls, num, den, shift: int) -> "Scalar":
        if not isinstance(num, flint.fmpq_poly):
            num = flint.fmpq_poly(num)
        if num.is_zero():
            return ZERO
        if den.is_zero():
            raise ZeroDivisionError("scalar division by zero")
        v = _valuation(num)
        if v:
            num = num.right_shift(v)
            shift += v
        v = _valuation(den)
        if v:
            den = den.right_shift(v)
            shift -= v
        if den.degree() > 0:
            qden = den if isinstance(den, flint.fmpq_poly) else flint.fmpq_poly(den)
            g = num.gcd(qden)
            if g.degree() > 0:
                num = num // g
                qden = qden // g
            den = qden
        if isinstance(den, flint.fmpq_poly):
            scale = flint.fmpq(den.denom())
            zden = den.numer()
        else:
            scale = flint.fmpq(1)
            zden = den
        content = zden.content() if zden.degree() > 0 else abs(zden[0])
        if zden[zden.degree()] < 0:
            content = -content
        if content != 1:
            zden = flint.fmpz_poly([c // content for c in zden.coeffs()])
            scale = scale / content
        if scale != 1:
            num = num * scale
        return cls._raw(num, zden, shift)

    @classmethod
    def from_laurent(cls, coeffs: dict[int, object]) -> "Scalar":
        """Build the Laurent polynomial ``sum c_k x^k`` from ``{k: c_k}``."""
        items = {k: _to_fmpq(c) for k, c in coeffs.items() if c != 0}
        if not items:
            return ZERO
        lo = min(items)
        out = [flint.fmpq(0)] * (max(items) - lo + 1)
        for k, c in items.items():
            out[k - lo] = c
        return cls._normalized(flint.fmpq_poly(out), _ZONE, lo)

    @classmethod
    def monomial(cls, k: int, c=1) -> "Scalar":
        """``c * x^k``."""
        c = _to_fmpq(c)
        if c == 0:
            return ZERO
        return cls._raw(flint.fmpq_poly([c]), _ZONE, k)

    # -- structure ------------------------------------------------------

    @property
    def num(self) -> dict[int, Fraction]:
        """Numerator as a Laurent polynomial ``{x-exponent: coefficient}``."""
        return {i + self._shift: _frac(c) for i, c in enumerate(self._num.coeffs()) if c != 0}

    @property
    def den(self) -> dict[int, Fraction]:
        """Denominator ``{x-exponent: coefficient}``; min exponent 0, content 1."""
        return {i: Fraction(int(c)) for i, c in enumerate(self._den.coeffs()) if c != 0}

    def is_zero(self) -> bool:
        return self._num.is_zero()

    def is_laurent_polynomial(self) -> bool:
        return self._den.degree() == 0

    def is_constant(self) -> bool:
        return self.is_zero() or (self._shift == 0 and self._num.degree() == 0
                                  and self._den.degree() == 0)

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"{self} is not a constant")
        return _frac(self._num[0]) if not self.is_zero() else Fraction(0)

    def __bool__(self) -> bool:
        return not self._num.is_zero()

    def __eq__(self, other) -> bool:
        if not isinstance(other, Scalar):
            try:
                other = Scalar(other)
            except TypeError:
                return NotImplemented
        return (self._shift == other._shift and self._num == other._num
                and self._den == other._den)

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self._shift, tuple(self._num.coeffs()),
                               tuple(int(c) for c in self._den.coeffs())))
        return self._hash

    # -- field operations ------------------------------------------------

    def __neg__(self) -> "Scalar":
        if self.is_zero():
            return self
        return Scalar._raw(-self._num, self._den, self._shift)

    def __pos__(self) -> "Scalar":
        return self

    def __add__(self, other) -> "Scalar":
        if not isinstance(other, Scalar):
            try:
                other = Scalar(other)
            except TypeError:
                return NotImplemented
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        s = min(self._shift, other._shift)
        a = self._num.left_shift(self._shift - s) if self._shift > s else self._num
        b = other._num.left_shift(other._shift - s) if other._shift > s else other._num
        if self._den == other._den:
            return Scalar._normalized(a + b, self._den, s)
        return Scalar._normalized(a * other._den + b * self._den, self._den * other._den, s)

    __radd__ = __add__

    def __sub__(self, other) -> "Scalar":
        if not isinstance(other, Scalar):
            try:
                other = Scalar(other)
            except TypeError:
                return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "Scalar":
        return Scalar(other) - self

    def __mul__(self, other) -> "Scalar":
        if not isinstance(other, Scalar):
            if isinstance(other, (int, Rational)):
                if other == 0:
                    return ZERO
                return Scalar._raw(self._num * _to_fmpq(other), self._den, self._shift)
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return ZERO
        if self._den.degree() == 0 and other._den.degree() == 0:
            return Scalar._raw(self._num * other._num, _ZONE, self._shift + other._shift)
        return Scalar._normalized(self._num * other._num, self._den * other._den,
                                  self._shift + other._shift)

    __rmul__ = __mul__

    def inverse(self) -> "Scalar":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero scalar")
        return Scalar._normalized(flint.fmpq_poly(self._den), self._num, -self._shift)

    def __truediv__(self, other) -> "Scalar":
        if not isinstance(other, Scalar):
            if isinstance(other, (int, Rational)):
                if other == 0:
                    raise ZeroDivisionError("scalar division by zero")
                return Scalar._raw(self._num / _to_fmpq(other), self._den, self._shift)
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other) -> "Scalar":
        return Scalar(other) * self.inverse()

    def __pow__(self, n: int) -> "Scalar":
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        if n == 0:
            return ONE
        return Scalar._raw(self._num ** n, self._den ** n, self._shift * n)

    # -- substitutions -------------------------------------------------------

    def adams(self, n: int) -> "Scalar":
        """Substitute ``x -> x^n``."""
        if n < 1:
            raise ValueError("Adams operation needs n >= 1")
        if n == 1 or self.is_zero():
            return self
        # inflation preserves coprimality, content and leading sign
        return Scalar._raw(_inflate(self._num, n), _inflate(self._den, n), self._shift * n)

    def evaluate(self, x0) -> Fraction:
        x0 = _to_fmpq(x0)
        if self.is_zero():
            return Fraction(0)
        dval = self._den(x0)
        if dval == 0 or (x0 == 0 and self._shift < 0):
            raise PoleError(f"pole of {self} at x = {x0}")
        val = self._num(x0) / dval
        if self._shift:
            val = val * x0 ** self._shift
        return _frac(val)

    # -- rendering -----------------------------------------------------------

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        num = _render(self.num)
        if self._den.degree() == 0:
            return num
        return f"({num})/({_render(self.den)})"

    def __repr__(self) -> str:
        return f"Scalar('{self}')"

    @classmethod
    def parse(cls, text: str) -> "Scalar":
        """Inverse of ``str``: read the canonical rendering back."""
        text = text.strip()
        if text.startswith("(") and ")/(" in text:
            head, tail = text.split(")/(", 1)
            return cls.from_laurent(_parse_laurent(head[1:])) / cls.from_laurent(
                _parse_laurent(tail[:-1]))
        return cls.from_laurent(_parse_laurent(text))


def _coef_str(c: Fraction) -> str:
    if c.denominator == 1 and c > 0:
        return str(c.numerator)
    return f"({c})"


def _render(poly: dict[int, Fraction]) -> str:
    terms = []
    for k in sorted(poly, reverse=True):
        c = poly[k]
        if k == 0:
            terms.append(_coef_str(c))
        else:
            e = f"x^{k}" if k > 0 else f"x^({k})"
            terms.append(e if c == 1 else f"{_coef_str(c)}*{e}")
    return "+".join(terms)


def _split_terms(text: str) -> list[str]:
    terms, depth, cur = [], 0, ""
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == "+" and depth == 0:
            terms.append(cur)
            cur = ""
        else:
            cur += ch
    terms.append(cur)
    return terms


def _parse_laurent(text: str) -> dict[int, Fraction]:
    out: dict[int, Fraction] = {}
    for term in _split_terms(text):
        if "x^" in term:
            coef, _, exp = term.rpartition("x^")
            coef = coef.rstrip("*")
            k = int(exp.strip("()"))
        else:
            coef, k = term, 0
        c = Fraction(coef.strip("()")) if coef else Fraction(1)
        out[k] = out.get(k, 0) + c
    return out


ZERO = Scalar._raw(flint.fmpq_poly([]), _ZONE, 0)
ONE = Scalar._raw(flint.fmpq_poly([1]), _ZONE, 0)
X = Scalar.monomial(1)
Q = Scalar.monomial(2)


def arith(op: str, a: Scalar, b: Scalar) -> Scalar:
    """Dispatch ``op`` in {add, sub, mul, div} on two scalars."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        if not b:
            raise ZeroDivisionError("scalar division by zero")
        return a / b
    raise ValueError(f"unknown operation {op!r}")


def adams(a: Scalar, n: int) -> Scalar:
    return Scalar(a).adams(n)


def eval_rational(a: Scalar, x0) -> Fraction:
    """Evaluate exactly at ``x = x0``; raises :class:`PoleError` at a pole."""
    return Scalar(a).evaluate(x0)


def clear_to_q_polynomial(a: Scalar, s: int) -> list[tuple[int, int]]:
    """Return ``a * (-x)^(-s)`` as ``[(q-exponent, integer coefficient), ...]``.

    Raises :class:`NotAPolynomialError` if the product is not a polynomial
    in ``q = x^2`` with integer coefficients.
    """
    b = Scalar(a) * (Scalar.monomial(-s, (-1) ** (s % 2)))
    if not b.is_laurent_polynomial():
        raise NotAPolynomialError(f"{b} has a nontrivial denominator")
    out = []
    for k, c in sorted(b.num.items()):
        if k < 0:
            raise NotAPolynomialError(f"negative power x^{k} in {b}")
        if k % 2:
            raise NotAPolynomialError(f"odd power of x remains: x^{k} in {b}")
        if c.denominator != 1:
            raise NotAPolynomialError(f"non-integer coefficient {c} in {b}")
        out.append((k // 2, int(c)))
    return out
