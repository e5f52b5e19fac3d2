from __future__ import annotations

import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dihedraldt.dtengine import a_series_closed
from dihedraldt.fqoracle import (
    BUDGET_ENV,
    BudgetExceeded,
    RepTuple,
    base_change,
    coefficient_check,
    count_JI,
    direct_sum,
    enumeration_budget,
    ext1_dim,
    hom_dim,
    random_gl,
    random_rep,
    rank_mod_p,
    sigma_rep,
    simple,
    twist,
)
from dihedraldt.rootsystem import build, euler_form


def brute_hom(M: RepTuple, N: RepTuple) -> int:
    """Count all families of linear maps commuting with every arrow, return log_p."""
    p, quiver = M.p, M.quiver
    shapes = [(N.d[i], M.d[i]) for i in range(quiver.n)]
    sizes = [a * b for a, b in shapes]
    count = 0
    for flat in itertools.product(range(p), repeat=sum(sizes)):
        phis, pos = [], 0
        for shape, size in zip(shapes, sizes):
            phis.append(np.array(flat[pos:pos + size], dtype=np.int64).reshape(shape))
            pos += size
        if all(not ((B @ phis[i] - phis[j] @ A) % p).any()
               for (i, j), A, B in zip(quiver.arrows, M.mats, N.mats)):
            count += 1
    k = round(np.log(count) / np.log(p))
    assert p ** k == count
    return k


def test_rank_mod_p():
    assert rank_mod_p(np.array([[1, 1], [1, 1]]), 2) == 1
    assert rank_mod_p(np.array([[2, 0], [0, 2]]), 2) == 0
    assert rank_mod_p(np.array([[1, 2], [3, 4]]), 5) == 2
    assert rank_mod_p(np.array([[1, 2], [3, 4]]), 2) == 1


def test_hom_on_simples():
    q = build(3).quiver
    S0, S2 = simple(q, 0, 3), simple(q, 2, 3)
    assert hom_dim(S0, S0) == 1
    assert hom_dim(S0, S2) == 0
    assert ext1_dim(S0, S2) == 1
    assert ext1_dim(S2, S0) == 0


@pytest.mark.parametrize("seed", range(6))
def test_hom_matches_brute_force(seed):
    rng = np.random.default_rng(seed)
    q = build(3).quiver
    d = tuple(rng.integers(0, 2, size=4))
    e = tuple(rng.integers(0, 2, size=4))
    M, N = random_rep(q, d, 2, rng), random_rep(q, e, 2, rng)
    assert hom_dim(M, N) == brute_hom(M, N)
    assert hom_dim(M, N) - ext1_dim(M, N) == euler_form(build(3), d, e)


def test_rep_validation():
    q = build(3).quiver
    with pytest.raises(ValueError):
        RepTuple(q, (1, 0, 1, 0), 4, simple(q, 0, 2).mats)
    with pytest.raises(ValueError):
        RepTuple(q, (1, 0, 1, 0), 2, simple(q, 0, 2).mats)
    with pytest.raises(ValueError):
        hom_dim(simple(q, 0, 2), simple(q, 0, 3))


def test_sigma_on_simples_f5():
    rs = build(4)
    S = [simple(rs.quiver, i, 5) for i in range(rs.n)]
    assert sigma_rep(S[0], S[0], rs.sigma) == 1
    assert sigma_rep(S[0], S[1], rs.sigma) == -1
    assert sigma_rep(S[1], S[0], rs.sigma) == -1
    assert sigma_rep(S[2], S[2], rs.sigma) == 0


vec5 = st.lists(st.integers(0, 2), min_size=5, max_size=5).map(tuple)


@settings(max_examples=30, deadline=None)
@given(vec5, vec5, st.integers(0, 2 ** 32 - 1))
def test_sigma_antisymmetry(d, e, seed):
    rs = build(4)
    rng = np.random.default_rng(seed)
    M, N = random_rep(rs.quiver, d, 3, rng), random_rep(rs.quiver, e, 3, rng)
    assert sigma_rep(M, twist(N, rs.sigma), rs.sigma) == -sigma_rep(M, N, rs.sigma)
    assert sigma_rep(twist(M, rs.sigma), N, rs.sigma) == -sigma_rep(M, N, rs.sigma)


def symmetric_rep(rs, a, b, c, p, rng):
    """A representation of D^_4 with Sigma M equal to M entry by entry."""
    d = (a, a, b, c, c)
    A = rng.integers(0, p, size=(b, a))
    B = rng.integers(0, p, size=(c, b))
    return RepTuple(rs.quiver, d, p, (A, A.copy(), B, B.copy()))


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 2), st.integers(0, 2), st.integers(0, 2), vec5,
       st.integers(0, 2 ** 32 - 1))
def test_symmetric_construction_vanishes(a, b, c, e, seed):
    rs = build(4)
    rng = np.random.default_rng(seed)
    M = symmetric_rep(rs, a, b, c, 3, rng)
    T = twist(M, rs.sigma)
    assert T.d == M.d and all((x == y).all() for x, y in zip(T.mats, M.mats))
    N = random_rep(rs.quiver, e, 3, rng)
    assert sigma_rep(M, N, rs.sigma) + sigma_rep(N, M, rs.sigma) == 0


@settings(max_examples=20, deadline=None)
@given(vec5, vec5, st.integers(0, 2 ** 32 - 1))
def test_hom_is_orbit_invariant(d, e, seed):
    rs = build(4)
    rng = np.random.default_rng(seed)
    M, N = random_rep(rs.quiver, d, 3, rng), random_rep(rs.quiver, e, 3, rng)
    g = [random_gl(k, 3, rng) if k else np.zeros((0, 0), dtype=np.int64) for k in d]
    assert hom_dim(base_change(M, g), N) == hom_dim(M, N)
    assert hom_dim(direct_sum(M, N), direct_sum(M, N)) >= hom_dim(M, M) + hom_dim(N, N)


@pytest.mark.parametrize("p", [2, 3, 5])
def test_count_examples(p):
    rs = build(3)
    assert count_JI(rs, (1, 0, 0, 0), p) == 1
    assert count_JI(rs, (1, 1, 0, 0), p) == p ** 2
    assert count_JI(rs, (1, 0, 1, 0), p) == p


def test_count_independent_of_workers():
    rs = build(3)
    d = (2, 2, 2, 1)
    assert count_JI(rs, d, 2, workers=1) == count_JI(rs, d, 2, workers=3)


def test_budget(monkeypatch):
    rs = build(3)
    with pytest.raises(BudgetExceeded) as info:
        count_JI(rs, (2, 2, 2, 2), 3, budget=1000)
    assert info.value.required == 3 ** 16
    monkeypatch.setenv(BUDGET_ENV, "17")
    assert enumeration_budget() == 17
    with pytest.raises(BudgetExceeded):
        count_JI(rs, (1, 1, 1, 1), 3)
    assert enumeration_budget(5) == 5


def test_coefficient_check_reports():
    rs = build(3)
    series = a_series_closed(rs, 4)
    rep = coefficient_check(rs, (1, 1, 1, 1), 3, series=series)
    assert rep.passed and rep.count == sum(c * 3 ** k for k, c in rep.P)
    data = rep.to_json()
    assert set(data) == {"d", "p", "s", "P", "count", "pass"}


def test_coefficient_check_detects_a_wrong_series():
    rs = build(3)
    series = a_series_closed(rs, 3)
    d = (1, 0, 1, 0)
    series.coeffs[d] = series[d] * 2
    assert not coefficient_check(rs, d, 2, series=series).passed
