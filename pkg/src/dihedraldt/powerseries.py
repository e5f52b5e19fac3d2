"""Truncated multivariate power series with plethystic calculus.

Series are graded by total degree: a series in ``nvars`` variables with
truncation order ``N`` stores the coefficients of all monomials ``t^d`` with
``sum(d) <= N``.  Coefficients are :class:`~dihedraldt.exactscalar.Scalar`
values or plain exact rationals (``int``/``Fraction``); the latter are used
for the numerical NCDT specialisation.

The plethystic exponential is implemented through Adams operations,

    Exp(A) = exp( sum_{n >= 1} psi_n(A) / n ),

where ``psi_n`` raises ``x`` to ``x^n`` in the coefficients and sends
``t^d`` to ``t^(n d)``.
"""

from __future__ import annotations

from collections import defaultdict
from fractions import Fraction
from math import comb
from typing import Iterable, Iterator

from .exactscalar import ONE, Q, Scalar

__all__ = [
    "Series",
    "SeriesError",
    "mobius",
    "pleth_exp",
    "pleth_log",
    "pochhammer",
    "qfact",
    "gl_motive",
    "macmahon",
    "degree_simplex",
]


class SeriesError(ValueError):
    """Raised on shape mismatches and violated preconditions."""


def mobius(n: int) -> int:
    result, m, p = 1, n, 2
    while p * p <= m:
        if m % p == 0:
            m //= p
            if m % p == 0:
                return 0
            result = -result
        p += 1
    if m > 1:
        result = -result
    return result


def degree_simplex(nvars: int, N: int, *, start: int = 0) -> Iterator[tuple[int, ...]]:
    """All exponent vectors of total degree ``start..N``, by degree then lex."""
    def rec(k, total):
        if k == 1:
            yield (total,)
            return
        for first in range(total, -1, -1):
            for rest in rec(k - 1, total - first):
                yield (first,) + rest

    for total in range(start, N + 1):
        yield from sorted(rec(nvars, total))


def _adams_coeff(c, n: int):
    return c.adams(n) if isinstance(c, Scalar) else c


def _add_vec(a, b):
    return tuple(x + y for x, y in zip(a, b))


class Series:
    """Truncated power series ``sum c_d t^d`` with ``sum(d) <= order``."""

    __slots__ = ("nvars", "order", "coeffs")

    def __init__(self, nvars: int, order: int, coeffs: dict | None = None):
        if nvars < 1 or order < 0:
            raise SeriesError("need nvars >= 1 and order >= 0")
        self.nvars = nvars
        self.order = order
        self.coeffs: dict[tuple[int, ...], object] = {}
        for d, c in (coeffs or {}).items():
            d = tuple(int(v) for v in d)
            if len(d) != nvars or min(d) < 0:
                raise SeriesError(f"bad exponent {d} for {nvars} variables")
            if sum(d) <= order and c:
                self.coeffs[d] = c

    # -- constructors --------------------------------------------------------

    @classmethod
    def one(cls, nvars: int, order: int, unit=ONE) -> "Series":
        return cls(nvars, order, {(0,) * nvars: unit})

    @classmethod
    def monomial(cls, nvars: int, order: int, d, c=ONE) -> "Series":
        return cls(nvars, order, {tuple(d): c})

    @classmethod
    def variable(cls, nvars: int, order: int, i: int, c=ONE) -> "Series":
        d = [0] * nvars
        d[i] = 1
        return cls(nvars, order, {tuple(d): c})

    def _like(self, coeffs) -> "Series":
        out = Series.__new__(Series)
        out.nvars, out.order = self.nvars, self.order
        out.coeffs = {d: c for d, c in coeffs.items() if c}
        return out

    def _check(self, other: "Series"):
        if not isinstance(other, Series):
            raise SeriesError(f"expected a Series, got {type(other).__name__}")
        if (self.nvars, self.order) != (other.nvars, other.order):
            raise SeriesError(
                f"shape mismatch: ({self.nvars}, {self.order}) vs ({other.nvars}, {other.order})")

    # -- access ----------------------------------------------------------------

    def __getitem__(self, d):
        d = tuple(d)
        if d in self.coeffs:
            return self.coeffs[d]
        return 0

    def constant_term(self):
        return self[(0,) * self.nvars]

    def by_degree(self) -> list[list[tuple]]:
        buckets: list[list[tuple]] = [[] for _ in range(self.order + 1)]
        for d, c in self.coeffs.items():
            buckets[sum(d)].append((d, c))
        return buckets

    def truncate(self, order: int) -> "Series":
        return Series(self.nvars, order, {d: c for d, c in self.coeffs.items() if sum(d) <= order})

    def items(self):
        return sorted(self.coeffs.items())

    def __eq__(self, other) -> bool:
        if not isinstance(other, Series):
            return NotImplemented
        return (self.nvars, self.order) == (other.nvars, other.order) and self.coeffs == other.coeffs

    def __repr__(self) -> str:
        terms = " + ".join(f"({c})*t^{list(d)}" for d, c in self.items()[:6])
        more = " + ..." if len(self.coeffs) > 6 else ""
        return f"Series(nvars={self.nvars}, order={self.order}: {terms or '0'}{more})"

    # -- ring operations -----------------------------------------------------

    def __add__(self, other: "Series") -> "Series":
        self._check(other)
        out = dict(self.coeffs)
        for d, c in other.coeffs.items():
            out[d] = out[d] + c if d in out else c
        return self._like(out)

    def __neg__(self) -> "Series":
        return self._like({d: -c for d, c in self.coeffs.items()})

    def __sub__(self, other: "Series") -> "Series":
        return self + (-other)

    def scale(self, c) -> "Series":
        return self._like({d: c * v for d, v in self.coeffs.items()})

    def __mul__(self, other) -> "Series":
        if not isinstance(other, Series):
            return self.scale(other)
        self._check(other)
        N = self.order
        right = other.by_degree()
        out: dict = {}
        for d, a in self.coeffs.items():
            room = N - sum(d)
            for k in range(room + 1):
                for e, b in right[k]:
                    key = _add_vec(d, e)
                    v = a * b
                    out[key] = out[key] + v if key in out else v
        return self._like(out)

    def __rmul__(self, c) -> "Series":
        return self.scale(c)

    def inv(self) -> "Series":
        """Multiplicative inverse; the constant term must be nonzero."""
        a0 = self.constant_term()
        if not a0:
            raise SeriesError("series with zero constant term is not invertible")
        inv0 = 1 / a0 if isinstance(a0, Scalar) else Fraction(1) / a0
        mine = self.by_degree()
        result = [[((0,) * self.nvars, inv0)]]
        for k in range(1, self.order + 1):
            acc: dict = {}
            for j in range(1, k + 1):
                for e, a in mine[j]:
                    for f, b in result[k - j]:
                        key = _add_vec(e, f)
                        v = a * b
                        acc[key] = acc[key] + v if key in acc else v
            result.append([(d, -c * inv0) for d, c in acc.items() if c])
        return self._like({d: c for bucket in result for d, c in bucket})

    def adams(self, n: int) -> "Series":
        """``psi_n``: ``t^d -> t^(n d)`` and ``x -> x^n`` in coefficients."""
        out = {}
        for d, c in self.coeffs.items():
            if n * sum(d) <= self.order:
                out[tuple(n * v for v in d)] = _adams_coeff(c, n)
        return self._like(out)

    def exp(self) -> "Series":
        """Ordinary exponential of a series without constant term."""
        if self.constant_term():
            raise SeriesError("exp needs a series without constant term")
        unit = self._unit()
        mine = self.by_degree()
        result = [[((0,) * self.nvars, unit)]]
        for k in range(1, self.order + 1):
            acc: dict = {}
            for j in range(1, k + 1):
                for e, a in mine[j]:
                    ja = j * a
                    for f, b in result[k - j]:
                        key = _add_vec(e, f)
                        v = ja * b
                        acc[key] = acc[key] + v if key in acc else v
            result.append([(d, _div(c, k)) for d, c in acc.items() if c])
        return self._like({d: c for bucket in result for d, c in bucket})

    def log(self) -> "Series":
        """Ordinary logarithm of a series with constant term 1."""
        if self.constant_term() != 1:
            raise SeriesError("log needs constant term 1")
        mine = self.by_degree()
        logs: list[list[tuple]] = [[]]
        for k in range(1, self.order + 1):
            acc: dict = {}
            for j in range(1, k):
                for e, a in logs[j]:
                    ja = j * a
                    for f, b in mine[k - j]:
                        key = _add_vec(e, f)
                        v = ja * b
                        acc[key] = acc[key] + v if key in acc else v
            bucket = []
            for d, b in mine[k]:
                c = b - _div(acc.pop(d), k) if d in acc else b
                bucket.append((d, c))
            bucket.extend((d, -_div(c, k)) for d, c in acc.items())
            logs.append([(d, c) for d, c in bucket if c])
        return self._like({d: c for bucket in logs for d, c in bucket})

    def _unit(self):
        for c in self.coeffs.values():
            return ONE if isinstance(c, Scalar) else 1
        return 1

    def to_json(self) -> list[dict]:
        """``[{"d": [...], "c": "<scalar>"}, ...]`` sorted by ``d``."""
        return [{"d": list(d), "c": str(c)} for d, c in self.items()]

    @classmethod
    def from_json(cls, nvars: int, order: int, rows: Iterable[dict]) -> "Series":
        return cls(nvars, order, {tuple(r["d"]): Scalar.parse(r["c"]) for r in rows})


def _div(c, k: int):
    if isinstance(c, Scalar):
        return c / k
    r = Fraction(c) / k
    return r.numerator if r.denominator == 1 else r


def pleth_exp(A: Series) -> Series:
    """Plethystic exponential of a series without constant term."""
    if A.constant_term():
        raise SeriesError("pleth_exp needs a series without constant term")
    L = A
    for n in range(2, A.order + 1):
        psi = A.adams(n)
        if psi.coeffs:
            L = L + psi.scale(Fraction(1, n))
    return L.exp()


def pleth_log(B: Series) -> Series:
    """Inverse of :func:`pleth_exp`; ``B`` must have constant term 1."""
    if B.constant_term() != 1:
        raise SeriesError("pleth_log needs constant term 1")
    L = B.log()
    out = L
    for n in range(2, B.order + 1):
        mu = mobius(n)
        if mu:
            psi = L.adams(n)
            if psi.coeffs:
                out = out + psi.scale(Fraction(mu, n))
    return out


# -- q-series helpers ---------------------------------------------------------

def pochhammer(a: Scalar, n: int, base: Scalar = Q) -> Scalar:
    """``(a; base)_n = prod_{i<n} (1 - base^i a)``."""
    if n < 0:
        raise ValueError("n must be >= 0")
    out = ONE
    for i in range(n):
        out = out * (1 - base ** i * a)
    return out


def qfact(n: int, base: Scalar = Q) -> Scalar:
    """``(base)_n = (base; base)_n``; with ``base = q^-1`` this is ``(q^-1)_n``."""
    return pochhammer(base, n, base)


def gl_motive(n: int) -> Scalar:
    """Motive of ``GL_n``: ``q^(n^2) (q^-1)_n``."""
    if n < 0:
        raise ValueError("n must be >= 0")
    return Q ** (n * n) * qfact(n, Q.inverse())


def macmahon(u, v, order: int, *, tilde: bool = False, invert: bool = False) -> Series:
    """Product expansion of ``M(t^u, t^v) = prod_{n>=1} (1 - t^(u + n v))^(-n)``.

    With ``tilde=True`` returns ``M(t^u, t^v) M(t^-u, t^v)``.  ``invert``
    flips every exponent sign, producing the reciprocal product directly.
    Coefficients are integers.
    """
    u, v = tuple(u), tuple(v)
    if len(u) != len(v):
        raise SeriesError("u and v must have the same length")
    if sum(v) <= 0 or min(v) < 0:
        raise SeriesError("v must be a nonzero monomial")
    nvars = len(v)
    signs = (1, -1) if tilde else (1,)
    factors = []
    for sgn in signs:
        n = 1
        while True:
            w = tuple(sgn * a + n * b for a, b in zip(u, v))
            if sum(w) > order:
                break
            if min(w) < 0:
                raise SeriesError(f"negative exponent {w} within truncation (n={n})")
            if sum(w) == 0:
                raise SeriesError("factor with constant monomial")
            factors.append((w, -n if invert else n))
            n += 1
    out = Series.one(nvars, order, 1)
    for w, m in factors:
        out = out * _binomial_power(w, m, nvars, order)
    return out


def _binomial_power(w, m: int, nvars: int, order: int) -> Series:
    """``(1 - t^w)^(-m)`` for integer ``m`` via the binomial series."""
    coeffs = {}
    k = 0
    while k * sum(w) <= order:
        if m >= 0:
            c = comb(m + k - 1, k) if k else 1
        else:
            c = (-1) ** k * comb(-m, k)
        if c:
            coeffs[tuple(k * a for a in w)] = c
        k += 1
    return Series(nvars, order, coeffs)
