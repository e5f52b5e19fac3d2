"""Motivic DT invariants and generating series for C^3 / D_2l.

``omega`` evaluates the closed formula for the DT invariants of the McKay
quiver with potential, indexed by dimension vectors of the affine quiver
D^_r (``r = l + 2``).  The generating series is assembled twice:

* :func:`a_series_closed` applies the plethystic exponential to
  ``sum Omega_d t^d / (q - 1)``;
* :func:`a_series_ar` multiplies one elementary factor per class of
  indecomposables (non-interacting real roots, imaginary roots, and
  Sigma-orbits of interacting roots), each expanded from its own partition
  sum without calling the plethystic exponential.
"""

from __future__ import annotations

from dataclasses import dataclass
from .exactscalar import ONE, Q, X, Scalar
from .powerseries import Series, macmahon, pleth_exp, pleth_log, qfact
from .rootsystem import (
    ImaginaryRoot,
    RealRoot,
    RootClass,
    RootSystemD,
    SigmaPairSum,
    build,
    classify,
    positive_roots,
)

__all__ = [
    "OmegaEntry",
    "omega",
    "omega_value",
    "omega_table",
    "omega_series",
    "a_series_closed",
    "a_series_ar",
    "c2_series",
    "a3_special_series",
    "extract_dt",
    "ncdt_series",
    "series_diff",
]

_QINV = Q.inverse()


@dataclass(frozen=True)
class OmegaEntry:
    d: tuple[int, ...]
    cls: RootClass
    value: Scalar

    def class_name(self) -> str:
        if self.cls is None:
            return "none"
        if isinstance(self.cls, RealRoot):
            return f"real(p={self.cls.p})"
        if isinstance(self.cls, ImaginaryRoot):
            return f"imaginary(n={self.cls.n})"
        return "sigma-pair"

    def to_json(self) -> dict:
        return {"d": list(self.d), "class": self.class_name(), "omega": str(self.value)}


def omega_value(rs: RootSystemD, cls: RootClass) -> Scalar:
    if cls is None:
        return Scalar(0)
    if isinstance(cls, RealRoot):
        return -X if cls.p == 1 else Q
    if isinstance(cls, SigmaPairSum):
        return Q
    return Q * (Q + rs.r)


def omega(rs: RootSystemD, d) -> OmegaEntry:
    d = tuple(int(v) for v in d)
    cls = classify(rs, d)
    return OmegaEntry(d, cls, omega_value(rs, cls))


def omega_table(rs: RootSystemD, N: int) -> list[OmegaEntry]:
    """Nonzero ``Omega_d`` for ``0 < |d| <= N``, ordered by degree then lex."""
    return [OmegaEntry(d, cls, omega_value(rs, cls)) for d, cls in positive_roots(rs, N)]


def omega_series(rs: RootSystemD, N: int) -> Series:
    """``sum_d Omega_d t^d / (q - 1)``."""
    inv = 1 / (Q - 1)
    return Series(rs.n, N, {e.d: e.value * inv for e in omega_table(rs, N)})


def a_series_closed(rs: RootSystemD, N: int) -> Series:
    if N < 1:
        raise ValueError("N must be >= 1")
    return pleth_exp(omega_series(rs, N))


# -- assembly from the per-class factorisation --------------------------------

def _inv_pochhammers(N: int) -> list[Scalar]:
    return [1 / qfact(m, _QINV) for m in range(N + 1)]


def _one_root_factor(d, nvars: int, N: int, weight=ONE) -> Series:
    """``sum_m weight^m t^(m d) / (q^-1)_m``: one indecomposable, no interaction."""
    inv = _inv_pochhammers(N)
    coeffs = {}
    m = 0
    while m * sum(d) <= N:
        coeffs[tuple(m * v for v in d)] = weight ** m * inv[m]
        m += 1
    return Series(nvars, N, coeffs)


def _pair_factor(d, e, nvars: int, N: int) -> Series:
    """Double sum ``sum (-x)^(-(m1-m2)^2) t^(m1 d + m2 e) / ((q^-1)_m1 (q^-1)_m2)``."""
    inv = _inv_pochhammers(N)
    coeffs = {}
    for m1 in range(N // sum(d) + 1):
        for m2 in range((N - m1 * sum(d)) // sum(e) + 1):
            key = tuple(m1 * a + m2 * b for a, b in zip(d, e))
            sign = -1 if (m1 - m2) % 2 else 1
            coeffs[key] = Scalar.monomial(-((m1 - m2) ** 2), sign) * inv[m1] * inv[m2]
    return Series(nvars, N, coeffs)


def _sparse_mul(acc: Series, factor: Series) -> Series:
    return acc * factor if len(factor.coeffs) < len(acc.coeffs) else factor * acc


def a_series_ar(rs: RootSystemD, N: int) -> Series:
    """Generating series as a product over non-interacting classes of indecomposables.

    * real roots with ``p = 0``: ``sum_m t^(m d) / (q^-1)_m``;
    * ``n delta``: the family of regular indecomposables has class ``q + r``,
      so the factor is the q-shifted one-root sum times ``r`` copies of the
      plain one-root sum;
    * each Sigma-orbit ``{d, Sigma d}`` of real roots with ``p = 1``: the
      two-vertex cyclic double sum.
    """
    if N < 1:
        raise ValueError("N must be >= 1")
    n = rs.n
    acc = Series.one(n, N)
    seen_pairs = set()
    for d, cls in positive_roots(rs, N):
        if isinstance(cls, RealRoot) and cls.p == 0:
            acc = _sparse_mul(acc, _one_root_factor(d, n, N))
        elif isinstance(cls, ImaginaryRoot):
            acc = _sparse_mul(acc, _one_root_factor(d, n, N, weight=Q))
            plain = _one_root_factor(d, n, N)
            for _ in range(rs.r):
                acc = _sparse_mul(acc, plain)
        elif isinstance(cls, RealRoot) and cls.p == 1:
            e = rs.apply_sigma(d)
            orbit = frozenset((d, e))
            if orbit in seen_pairs:
                continue
            seen_pairs.add(orbit)
            acc = _sparse_mul(acc, _pair_factor(d, e, n, N))
    return acc


def c2_series(N: int) -> tuple[Series, Series]:
    """Both sides of the cyclic two-vertex identity, in two variables."""
    lhs = _pair_factor((1, 0), (0, 1), 2, N)
    inner = Series(2, N, {(1, 1): Q / (Q - 1), (1, 0): -X / (Q - 1), (0, 1): -X / (Q - 1)})
    return lhs, pleth_exp(inner)


def a3_special_series(N: int) -> Series:
    """The closed A^_3 expression with vertices identified with Z/4."""
    def mono(*idx):
        v = [0, 0, 0, 0]
        for i in idx:
            v[i % 4] += 1
        return tuple(v)

    bracket: dict = {}

    def add(d, c):
        bracket[d] = bracket.get(d, Scalar(0)) + c

    for i in range(4):
        for j in range(i + 1, 4):
            add(mono(i, j), Q)
    for i in range(4):
        add(mono(i), -X)
        add(mono(i, i + 1, i + 2), -X)
    delta = (1, 1, 1, 1)
    add(delta, Q * (Q + 3))
    inner = Series(4, N, bracket).scale(1 / (Q - 1))
    geometric = Series(4, N, {tuple(k * v for v in delta): ONE for k in range(N // 4 + 1)})
    return pleth_exp(inner * geometric)


def extract_dt(A: Series, rs: RootSystemD | None = None) -> list[OmegaEntry]:
    """Read off ``Omega_d = (q - 1) * [t^d] Log(A)``, nonzero entries only.

    Entries are ordered by degree then lex, like :func:`omega_table`.  With
    ``rs`` the root class of each ``d`` is filled in as well, so the result
    compares equal to ``omega_table(rs, N)`` when ``A`` comes from it.
    """
    L = pleth_log(A)
    out = []
    for d, c in sorted(L.items(), key=lambda item: (sum(item[0]), item[0])):
        if any(d):
            out.append(OmegaEntry(d, classify(rs, d) if rs is not None else None, c * (Q - 1)))
    return out


def ncdt_series(N: int, rs: RootSystemD | None = None) -> tuple[Series, Series]:
    """Both sides of the NCDT identity framed at vertex 0 (``r = 3`` only).

    ``exp_side = Exp(sum_d d_0 Omega_d(1) t^d)``; ``product_side`` is the
    MacMahon-type product.  Coefficients are integers.
    """
    if rs is None:
        rs = build(3)
    if rs.r != 3:
        raise ValueError("the NCDT product formula is stated for r = 3 only")
    if N < 4:
        raise ValueError("N must be >= 4")
    coeffs = {}
    for e in omega_table(rs, N):
        if e.d[0]:
            coeffs[e.d] = e.d[0] * int(e.value.evaluate(1))
    exp_side = pleth_exp(Series(4, N, coeffs))

    delta = (1, 1, 1, 1)
    zero = (0, 0, 0, 0)
    t = lambda *idx: tuple(1 if i in idx else 0 for i in range(4))  # noqa: E731
    prod = macmahon(zero, delta, N)
    prod = prod * prod * prod * prod
    for u in (t(1, 2), t(1, 3), t(2, 3)):
        prod = prod * macmahon(u, delta, N, tilde=True)
    for u in (t(1, 2, 3), t(1), t(2), t(3)):
        prod = prod * macmahon(u, delta, N, tilde=True).inv()
    return exp_side, prod


def series_diff(a: Series, b: Series) -> list[tuple]:
    """Monomials where two series disagree."""
    keys = set(a.coeffs) | set(b.coeffs)
    return sorted(d for d in keys if a[d] != b[d])

