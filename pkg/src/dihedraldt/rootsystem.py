"""The affine quiver of type D^_r, its Euler form and the AR translation on K-theory.

Vertices are ``0..r``.  For ``r >= 4`` the arrows are::

    0 -> 2, 1 -> 2, 2 -> 3, ..., (r-3) -> (r-2), (r-2) -> (r-1), (r-2) -> r

and for ``r = 3`` (where D^_3 = A^_3) they are ``0->2, 0->3, 1->2, 1->3``.
Dimension vectors are identified with elements of the root lattice via
``e_i = alpha_i``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Union

import numpy as np

from .powerseries import degree_simplex

__all__ = [
    "QuiverD",
    "RootSystemD",
    "RealRoot",
    "ImaginaryRoot",
    "SigmaPairSum",
    "RootClass",
    "build",
    "euler_form",
    "s_form",
    "p_parity",
    "classify",
    "positive_roots",
    "epsilon_roots",
    "exceptional_orbits",
    "tube_quasisimples",
]


@dataclass(frozen=True)
class QuiverD:
    r: int
    arrows: tuple[tuple[int, int], ...]

    @classmethod
    def standard(cls, r: int) -> "QuiverD":
        if r < 3:
            raise ValueError(f"D^_r needs r >= 3, got {r}")
        if r == 3:
            arrows = ((0, 2), (0, 3), (1, 2), (1, 3))
        else:
            arrows = ((0, 2), (1, 2)) + tuple((i, i + 1) for i in range(2, r - 2)) \
                + ((r - 2, r - 1), (r - 2, r))
        return cls(r, arrows)

    @property
    def n(self) -> int:
        return self.r + 1

    def adjacency(self) -> np.ndarray:
        A = np.zeros((self.n, self.n), dtype=np.int64)
        for i, j in self.arrows:
            A[i, j] += 1
        return A

    def arrow_index(self, i: int, j: int) -> int:
        return self.arrows.index((i, j))


@dataclass(frozen=True)
class RealRoot:
    p: int


@dataclass(frozen=True)
class ImaginaryRoot:
    n: int


@dataclass(frozen=True)
class SigmaPairSum:
    witness: tuple[int, ...]


RootClass = Union[RealRoot, ImaginaryRoot, SigmaPairSum, None]


@dataclass(frozen=True, eq=False)
class RootSystemD:
    quiver: QuiverD
    euler: np.ndarray
    sigma: tuple[int, ...]
    delta: np.ndarray
    rho: np.ndarray
    coxeter: np.ndarray
    proj: np.ndarray = field(repr=False)
    inj: np.ndarray = field(repr=False)

    @property
    def r(self) -> int:
        return self.quiver.r

    @property
    def n(self) -> int:
        return self.quiver.n

    @property
    def sigma_matrix(self) -> np.ndarray:
        S = np.zeros((self.n, self.n), dtype=np.int64)
        for i, j in enumerate(self.sigma):
            S[j, i] = 1
        return S

    @property
    def coxeter_inverse(self) -> np.ndarray:
        # T = -E^{-1} E^t, so T^{-1} = -E^{-t} E
        return -self.inj.T @ self.euler

    def apply_sigma(self, d) -> tuple[int, ...]:
        d = tuple(d)
        return tuple(d[self.sigma[i]] for i in range(self.n))

    def tau(self, d) -> np.ndarray:
        return self.coxeter @ np.asarray(d, dtype=np.int64)

    def tau_inv(self, d) -> np.ndarray:
        return self.coxeter_inverse @ np.asarray(d, dtype=np.int64)

    def to_json(self) -> dict:
        return {
            "r": self.r,
            "arrows": [list(a) for a in self.quiver.arrows],
            "euler": self.euler.tolist(),
            "sigma": list(self.sigma),
            "delta": self.delta.tolist(),
            "rho": self.rho.tolist(),
            "coxeter": self.coxeter.tolist(),
            "projectives": self.proj.T.tolist(),
            "injectives": self.inj.T.tolist(),
        }


def build(r: int) -> RootSystemD:
    """Assemble the root system data of D^_r and check its invariants."""
    quiver = QuiverD.standard(r)
    n = quiver.n
    A = quiver.adjacency()
    E = np.eye(n, dtype=np.int64) - A
    # paths[i, j] = number of paths i -> j; A is nilpotent
    paths = np.eye(n, dtype=np.int64)
    power = np.eye(n, dtype=np.int64)
    for _ in range(n):
        power = power @ A
        paths = paths + power
    proj = paths.T  # column i = dim P_i
    inj = paths     # column i = dim I_i
    # P^{-1} = (I - A)^t exactly, so T P = -I reduces to an integer product
    T = -inj @ E.T
    sigma = tuple([1, 0] + list(range(2, r - 1)) + [r, r - 1])
    delta = np.array([1, 1] + [2] * (r - 3) + [1, 1], dtype=np.int64)
    rho = np.ones(n, dtype=np.int64)
    rs = RootSystemD(quiver, E, sigma, delta, rho, T, proj, inj)
    _self_check(rs)
    return rs


def _self_check(rs: RootSystemD) -> None:
    S = rs.sigma_matrix
    if not np.array_equal(rs.coxeter @ rs.proj, -rs.inj):
        raise AssertionError("T [P_i] != -[I_i]")
    if rs.delta @ rs.euler @ rs.delta != 0:
        raise AssertionError("chi(delta, delta) != 0")
    if not np.array_equal(rs.coxeter @ rs.delta, rs.delta):
        raise AssertionError("T delta != delta")
    if not np.array_equal(rs.coxeter @ S, S @ rs.coxeter):
        raise AssertionError("T Sigma != Sigma T")
    arrows = set(rs.quiver.arrows)
    if {(rs.sigma[i], rs.sigma[j]) for i, j in arrows} != arrows:
        raise AssertionError("Sigma is not a quiver automorphism")


def euler_form(rs: RootSystemD, d, e) -> int:
    """``chi(d, e) = sum d_i e_i - sum_{a: i -> j} d_i e_j``."""
    return int(np.asarray(d, dtype=np.int64) @ rs.euler @ np.asarray(e, dtype=np.int64))


def s_form(rs: RootSystemD, d, e) -> int:
    """``s(d, e) = chi(d, e) - chi(d, Sigma e)``."""
    return euler_form(rs, d, e) - euler_form(rs, d, rs.apply_sigma(e))


def p_parity(rs: RootSystemD, d) -> int:
    r = rs.r
    return (d[0] + d[1] + d[r - 1] + d[r]) % 2


def _is_real(rs: RootSystemD, d) -> bool:
    return min(d) >= 0 and any(d) and euler_form(rs, d, d) == 1


def _imaginary_multiple(rs: RootSystemD, d) -> int:
    k = d[0]
    if k > 0 and all(v == k * w for v, w in zip(d, rs.delta.tolist())):
        return k
    return 0


def _pair_witness(rs: RootSystemD, d) -> tuple[int, ...] | None:
    r = rs.r
    if d[0] != d[1] or d[r - 1] != d[r]:
        return None
    if any(d[i] % 2 for i in range(2, r - 1)):
        return None
    # lexicographically largest witness first, so alpha_0 beats alpha_1
    for a, b in product(range(d[0], -1, -1), range(d[r - 1], -1, -1)):
        w = [0] * rs.n
        w[0], w[1] = a, d[0] - a
        w[r - 1], w[r] = b, d[r - 1] - b
        for i in range(2, r - 1):
            w[i] = d[i] // 2
        if _is_real(rs, w) and p_parity(rs, w) == 1:
            return tuple(w)
    return None


def classify(rs: RootSystemD, d) -> RootClass:
    """Classify a nonzero dimension vector for the DT formula.

    Returns ``RealRoot(p)``, ``ImaginaryRoot(n)`` (``d = n delta``),
    ``SigmaPairSum(d')`` for ``d = d' + Sigma d'`` with ``d'`` a real root of
    parity 1 (ties go to the lexicographically largest ``d'``, i.e. the
    witness weighted towards low vertex indices), or ``None``.
    """
    d = tuple(int(v) for v in d)
    if len(d) != rs.n:
        raise ValueError(f"dimension vector must have length {rs.n}")
    if min(d) < 0 or not any(d):
        raise ValueError(f"need a nonzero vector in N^{rs.n}, got {d}")
    tags = []
    if _is_real(rs, d):
        tags.append(RealRoot(p_parity(rs, d)))
    n = _imaginary_multiple(rs, d)
    if n:
        tags.append(ImaginaryRoot(n))
    w = _pair_witness(rs, d)
    if w is not None:
        tags.append(SigmaPairSum(w))
    if len(tags) > 1:
        raise AssertionError(f"overlapping root classes for {d}: {tags}")
    return tags[0] if tags else None


def positive_roots(rs: RootSystemD, N: int) -> list[tuple[tuple[int, ...], RootClass]]:
    """Box scan of all ``d`` with ``0 < |d| <= N`` and a non-``None`` class."""
    out = []
    for d in degree_simplex(rs.n, N, start=1):
        cls = classify(rs, d)
        if cls is not None:
            out.append((d, cls))
    return out


def epsilon_roots(rs: RootSystemD, N: int) -> set[tuple[int, ...]]:
    """Positive roots of degree <= N generated from the epsilon model of D_r.

    Finite roots ``+-(eps_i +- eps_j)`` are written in the basis
    ``alpha_k = eps_k - eps_(k+1)``, ``alpha_r = eps_(r-1) + eps_r``
    and shifted by multiples of ``delta``; imaginary roots are ``n delta``.
    """
    r = rs.r
    basis = []
    for k in range(1, r):
        v = [Fraction(0)] * r
        v[k - 1], v[k] = Fraction(1), Fraction(-1)
        basis.append(v)
    v = [Fraction(0)] * r
    v[r - 2], v[r - 1] = Fraction(1), Fraction(1)
    basis.append(v)
    B = np.array(basis, dtype=object).T  # columns alpha_1..alpha_r in eps coords
    Binv = _rational_inverse(B)
    finite = []
    for i in range(r):
        for j in range(i + 1, r):
            for sgn in (1, -1):
                eps = [0] * r
                eps[i], eps[j] = 1, sgn
                coords = Binv @ np.array(eps, dtype=object)
                if any(c.denominator != 1 for c in coords):
                    raise AssertionError("non-integral root coordinates")
                alpha = tuple([0] + [int(c) for c in coords])
                finite.append(alpha)
                finite.append(tuple(-a for a in alpha))
    delta = rs.delta.tolist()
    out = set()
    for n in range(0, N + 1):
        for f in finite:
            d = tuple(a + n * b for a, b in zip(f, delta))
            if min(d) >= 0 and 0 < sum(d) <= N:
                out.add(d)
        if n >= 1 and n * sum(delta) <= N:
            out.add(tuple(n * b for b in delta))
    return out


def _rational_inverse(M: np.ndarray) -> np.ndarray:
    n = M.shape[0]
    aug = [[Fraction(M[i, j]) for j in range(n)] + [Fraction(int(i == j)) for j in range(n)]
           for i in range(n)]
    for col in range(n):
        piv = next(i for i in range(col, n) if aug[i][col] != 0)
        aug[col], aug[piv] = aug[piv], aug[col]
        pv = aug[col][col]
        aug[col] = [v / pv for v in aug[col]]
        for i in range(n):
            if i != col and aug[i][col] != 0:
                f = aug[i][col]
                aug[i] = [a - f * b for a, b in zip(aug[i], aug[col])]
    return np.array([row[n:] for row in aug], dtype=object)


def exceptional_orbits(rs: RootSystemD, N: int) -> set[tuple[int, ...]]:
    """Dimension vectors of tau^-k P_i and tau^k I_i for i in {0, 1, r-1, r}."""
    r = rs.r
    out: set[tuple[int, ...]] = set()
    # degrees grow by |delta| every 2(r-2) steps at worst; this bound is generous
    steps = 2 * (rs.n + 1) * (N + 2)
    for i in (0, 1, r - 1, r):
        for start, move in ((rs.proj[:, i], rs.tau_inv), (rs.inj[:, i], rs.tau)):
            v = start.copy()
            for _ in range(steps):
                if v.min() < 0:
                    break
                if v.sum() <= N:
                    out.add(tuple(int(a) for a in v))
                v = move(v)
    return out


def tube_quasisimples(rs: RootSystemD) -> tuple[list, list, list]:
    """Quasi-simple dimension vectors of the exceptional tubes R1, R2, R3.

    For ``r = 3`` there is no third exceptional tube and R3 is empty.
    """
    r, n = rs.r, rs.n

    def vec(*idx):
        v = [0] * n
        for i in idx:
            v[i] += 1
        return tuple(v)

    middle = list(range(2, r - 1))
    R1 = [vec(0, *middle, r - 1), vec(1, *middle, r)]
    R2 = [vec(0, *middle, r), vec(1, *middle, r - 1)]
    R3 = [] if r == 3 else [vec(i) for i in middle] + [tuple(rs.rho.tolist())]
    return R1, R2, R3
