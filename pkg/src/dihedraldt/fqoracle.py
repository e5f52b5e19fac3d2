"""Brute-force point counts over F_p, independent of the closed formula.

For a dimension vector ``d`` the oracle enumerates every representation
``M`` of the affine quiver over ``F_p`` and sums ``p^dim Hom(M, Sigma M)``:
the fibre of the forgetful map from representations of the cut Jacobian
algebra is the space ``Hom(M, Sigma M)``.  The closed form predicts that
this count equals ``P(p)`` for the polynomial ``P`` obtained by clearing the
coefficient of ``t^d`` in the generating series, see :func:`coefficient_check`.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from math import prod

import numpy as np

from .dtengine import a_series_closed
from .exactscalar import NotAPolynomialError, clear_to_q_polynomial
from .powerseries import Series, gl_motive
from .rootsystem import QuiverD, RootSystemD, s_form

__all__ = [
    "DEFAULT_BUDGET",
    "BUDGET_ENV",
    "BudgetExceeded",
    "RepTuple",
    "CheckReport",
    "rank_mod_p",
    "inverse_mod_p",
    "hom_dim",
    "ext1_dim",
    "sigma_rep",
    "twist",
    "simple",
    "direct_sum",
    "base_change",
    "random_rep",
    "random_gl",
    "representation_dimension",
    "count_JI",
    "coefficient_check",
    "enumeration_budget",
]

DEFAULT_BUDGET = 2 ** 24
BUDGET_ENV = "DIHEDRALDT_BUDGET"
MAX_PRIME = 97


class BudgetExceeded(RuntimeError):
    def __init__(self, required: int, budget: int):
        super().__init__(f"enumeration needs {required} tuples, budget is {budget}")
        self.required = required
        self.budget = budget


def enumeration_budget(budget: int | None = None) -> int:
    if budget is not None:
        return budget
    env = os.environ.get(BUDGET_ENV)
    return int(env) if env else DEFAULT_BUDGET


def _is_prime(p: int) -> bool:
    return p >= 2 and all(p % k for k in range(2, int(p ** 0.5) + 1))


@dataclass(frozen=True, eq=False)
class RepTuple:
    """A representation over F_p: one ``d_j x d_i`` matrix per arrow ``i -> j``."""

    quiver: QuiverD
    d: tuple[int, ...]
    p: int
    mats: tuple[np.ndarray, ...] = field(repr=False)

    def __post_init__(self):
        if not _is_prime(self.p) or self.p > MAX_PRIME:
            raise ValueError(f"p = {self.p} must be a prime <= {MAX_PRIME}")
        if len(self.d) != self.quiver.n or len(self.mats) != len(self.quiver.arrows):
            raise ValueError("dimension vector or arrow count does not match the quiver")
        for (i, j), m in zip(self.quiver.arrows, self.mats):
            if m.shape != (self.d[j], self.d[i]):
                raise ValueError(f"arrow {i}->{j} needs shape {(self.d[j], self.d[i])}, got {m.shape}")


def _check_pair(M: RepTuple, N: RepTuple) -> None:
    if M.quiver != N.quiver:
        raise ValueError("representations of different quivers")
    if M.p != N.p:
        raise ValueError(f"representations over different primes {M.p} and {N.p}")


def rank_mod_p(A: np.ndarray, p: int) -> int:
    """Rank over F_p by Gaussian elimination."""
    A = np.array(A, dtype=np.int64) % p
    rows, cols = A.shape
    rank = 0
    for c in range(cols):
        if rank == rows:
            break
        nz = np.nonzero(A[rank:, c])[0]
        if nz.size == 0:
            continue
        piv = rank + nz[0]
        if piv != rank:
            A[[rank, piv]] = A[[piv, rank]]
        A[rank] = (A[rank] * pow(int(A[rank, c]), -1, p)) % p
        below = np.nonzero(A[rank + 1:, c])[0] + rank + 1
        if below.size:
            A[below] = (A[below] - np.outer(A[below, c], A[rank])) % p
        rank += 1
    return rank


def inverse_mod_p(A: np.ndarray, p: int) -> np.ndarray:
    n = A.shape[0]
    aug = np.concatenate([np.array(A, dtype=np.int64) % p, np.eye(n, dtype=np.int64)], axis=1)
    for c in range(n):
        nz = np.nonzero(aug[c:, c])[0]
        if nz.size == 0:
            raise ValueError("matrix is singular mod p")
        piv = c + nz[0]
        aug[[c, piv]] = aug[[piv, c]]
        aug[c] = (aug[c] * pow(int(aug[c, c]), -1, p)) % p
        others = [i for i in range(n) if i != c and aug[i, c]]
        if others:
            aug[others] = (aug[others] - np.outer(aug[others, c], aug[c])) % p
    return aug[:, n:]


def _hom_matrix(quiver: QuiverD, d, e, Mmats, Nmats) -> tuple[np.ndarray, int]:
    """Matrix of ``(phi_i) -> (N_a phi_i - phi_j M_a)_a`` on column-major vecs."""
    offsets, total = [], 0
    for i in range(quiver.n):
        offsets.append(total)
        total += e[i] * d[i]
    blocks = []
    for (i, j), Ma, Na in zip(quiver.arrows, Mmats, Nmats):
        rows = e[j] * d[i]
        if rows == 0:
            continue
        B = np.zeros((rows, total), dtype=np.int64)
        if e[i] * d[i]:
            B[:, offsets[i]:offsets[i] + e[i] * d[i]] += np.kron(np.eye(d[i], dtype=np.int64), Na)
        if e[j] * d[j]:
            B[:, offsets[j]:offsets[j] + e[j] * d[j]] -= np.kron(Ma.T, np.eye(e[j], dtype=np.int64))
        blocks.append(B)
    if not blocks:
        return np.zeros((0, total), dtype=np.int64), total
    return np.vstack(blocks), total


def hom_dim(M: RepTuple, N: RepTuple) -> int:
    """``dim_{F_p} Hom(M, N)``."""
    _check_pair(M, N)
    A, unknowns = _hom_matrix(M.quiver, M.d, N.d, M.mats, N.mats)
    if unknowns == 0:
        return 0
    return unknowns - rank_mod_p(A, M.p)


def _euler(quiver: QuiverD, d, e) -> int:
    return sum(a * b for a, b in zip(d, e)) - sum(d[i] * e[j] for i, j in quiver.arrows)


def ext1_dim(M: RepTuple, N: RepTuple) -> int:
    """``dim Ext^1(M, N) = dim Hom(M, N) - chi(dim M, dim N)`` (hereditary)."""
    return hom_dim(M, N) - _euler(M.quiver, M.d, N.d)


def twist(M: RepTuple, sigma) -> RepTuple:
    """``Sigma M``: ``(Sigma M)_i = M_{Sigma i}``, arrows transported along ``Sigma``."""
    quiver = M.quiver
    d = tuple(M.d[sigma[i]] for i in range(quiver.n))
    mats = tuple(M.mats[quiver.arrow_index(sigma[i], sigma[j])] for i, j in quiver.arrows)
    return RepTuple(quiver, d, M.p, mats)


def sigma_rep(M: RepTuple, N: RepTuple, sigma) -> int:
    """Interaction ``h0(M,N) + h1(M,N) - h0(M,Sigma N) - h1(M,Sigma N)``."""
    SN = twist(N, sigma)
    return hom_dim(M, N) + ext1_dim(M, N) - hom_dim(M, SN) - ext1_dim(M, SN)


def _zero_mats(quiver: QuiverD, d):
    return tuple(np.zeros((d[j], d[i]), dtype=np.int64) for i, j in quiver.arrows)


def simple(quiver: QuiverD, i: int, p: int) -> RepTuple:
    d = tuple(int(k == i) for k in range(quiver.n))
    return RepTuple(quiver, d, p, _zero_mats(quiver, d))


def direct_sum(M: RepTuple, N: RepTuple) -> RepTuple:
    _check_pair(M, N)
    d = tuple(a + b for a, b in zip(M.d, N.d))
    mats = []
    for (i, j), A, B in zip(M.quiver.arrows, M.mats, N.mats):
        S = np.zeros((d[j], d[i]), dtype=np.int64)
        S[:M.d[j], :M.d[i]] = A
        S[M.d[j]:, M.d[i]:] = B
        mats.append(S)
    return RepTuple(M.quiver, d, M.p, tuple(mats))


def base_change(M: RepTuple, g) -> RepTuple:
    """Act by ``g in G_d``: ``M_a -> g_j M_a g_i^-1``."""
    ginv = [inverse_mod_p(gi, M.p) if gi.size else gi for gi in g]
    mats = tuple((g[j] @ A @ ginv[i]) % M.p for (i, j), A in zip(M.quiver.arrows, M.mats))
    return RepTuple(M.quiver, M.d, M.p, mats)


def random_rep(quiver: QuiverD, d, p: int, rng: np.random.Generator) -> RepTuple:
    d = tuple(d)
    mats = tuple(rng.integers(0, p, size=(d[j], d[i])) for i, j in quiver.arrows)
    return RepTuple(quiver, d, p, mats)


def random_gl(n: int, p: int, rng: np.random.Generator) -> np.ndarray:
    while True:
        g = rng.integers(0, p, size=(n, n))
        if rank_mod_p(g, p) == n:
            return g


def representation_dimension(quiver: QuiverD, d) -> int:
    return sum(d[i] * d[j] for i, j in quiver.arrows)


def _count_range(arrows, n, d, p, sigma, start, stop) -> int:
    quiver = QuiverD(n - 1, tuple(arrows))
    shapes = [(d[j], d[i]) for i, j in arrows]
    sizes = [a * b for a, b in shapes]
    e = tuple(d[sigma[i]] for i in range(n))
    perm = [quiver.arrow_index(sigma[i], sigma[j]) for i, j in arrows]
    dim = sum(sizes)
    weights = p ** np.arange(dim, dtype=np.int64)
    total = 0
    for idx in range(start, stop):
        digits = (idx // weights) % p
        mats, pos = [], 0
        for shape, size in zip(shapes, sizes):
            mats.append(digits[pos:pos + size].reshape(shape))
            pos += size
        smats = [mats[k] for k in perm]
        A, unknowns = _hom_matrix(quiver, d, e, mats, smats)
        h = unknowns - rank_mod_p(A, p) if unknowns else 0
        total += p ** h
    return total


def count_JI(rs: RootSystemD, d, p: int, *, budget: int | None = None, workers: int = 1) -> int:
    """``sum_{M in R(Q'', d)(F_p)} p^{dim Hom(M, Sigma M)} = |R(J_I, d)(F_p)|``."""
    d = tuple(int(v) for v in d)
    if not _is_prime(p) or p > MAX_PRIME:
        raise ValueError(f"p = {p} must be a prime <= {MAX_PRIME}")
    dim = representation_dimension(rs.quiver, d)
    required = p ** dim
    budget = enumeration_budget(budget)
    if required > budget:
        raise BudgetExceeded(required, budget)
    args = (rs.quiver.arrows, rs.n, d, p, rs.sigma)
    if workers <= 1 or required < 4096:
        return _count_range(*args, 0, required)
    chunks = 4 * workers
    bounds = [required * k // chunks for k in range(chunks + 1)]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        futures = [pool.submit(_count_range, *args, lo, hi) for lo, hi in zip(bounds, bounds[1:])]
        return sum(f.result() for f in futures)


@dataclass
class CheckReport:
    d: tuple[int, ...]
    p: int
    s: int
    P: list[tuple[int, int]] | None
    count: int
    passed: bool
    error: str | None = None

    def to_json(self) -> dict:
        out = {
            "d": list(self.d),
            "p": self.p,
            "s": self.s,
            "P": [list(t) for t in self.P] if self.P is not None else None,
            "count": self.count,
            "pass": self.passed,
        }
        if self.error:
            out["error"] = self.error
        return out


def coefficient_check(rs: RootSystemD, d, p: int, *, series: Series | None = None,
                      budget: int | None = None, workers: int = 1) -> CheckReport:
    """Compare the cleared closed-form coefficient at ``q = p`` with the brute-force count.

    ``P(q) = c_d [G_d] (-x)^(-s(d,d))`` must be an integer polynomial in ``q``
    with ``P(p) = count_JI(d, p)``.  A mismatch yields a failing report.
    """
    d = tuple(int(v) for v in d)
    if series is None:
        series = a_series_closed(rs, sum(d))
    c = series[d]
    g = prod((gl_motive(k) for k in d), start=gl_motive(0))
    s = s_form(rs, d, d)
    count = count_JI(rs, d, p, budget=budget, workers=workers)
    try:
        P = clear_to_q_polynomial(c * g, s)
    except NotAPolynomialError as exc:
        return CheckReport(d, p, s, None, count, False, str(exc))
    value = sum(coef * p ** k for k, coef in P)
    return CheckReport(d, p, s, P, count, value == count)
