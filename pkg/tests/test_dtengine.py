from __future__ import annotations

from math import prod

import pytest

from dihedraldt.dtengine import (
    a3_special_series,
    a_series_ar,
    a_series_closed,
    c2_series,
    extract_dt,
    ncdt_series,
    omega,
    omega_table,
    series_diff,
)
from dihedraldt.exactscalar import Q, X, Scalar, clear_to_q_polynomial
from dihedraldt.powerseries import Series, degree_simplex, gl_motive, pleth_exp
from dihedraldt.rootsystem import RealRoot, SigmaPairSum, build, s_form


def test_omega_examples():
    rs = build(3)
    assert omega(rs, (1, 1, 1, 1)).value == Q * (Q + 3)
    assert omega(rs, (0, 0, 1, 0)).value == -X
    assert omega(rs, (1, 0, 1, 0)).value == Q
    assert omega(rs, (2, 0, 0, 0)).value == 0
    assert omega(build(5), (1, 1, 2, 2, 1, 1)).value == Q * (Q + 5)
    with pytest.raises(ValueError):
        omega(rs, (0, 0, 0, 0))


def test_omega_table_r3_degree4():
    table = omega_table(build(3), 4)
    values = [e.value for e in table]
    assert len(table) == 15
    assert values.count(-X) == 8
    assert values.count(Q) == 6
    assert values.count(Q * (Q + 3)) == 1
    assert sum(isinstance(e.cls, SigmaPairSum) for e in table) == 2
    assert sum(isinstance(e.cls, RealRoot) and e.cls.p == 0 for e in table) == 4


@pytest.mark.parametrize("r", [3, 4, 5])
def test_only_three_values(r):
    rs = build(r)
    vals = {e.value for e in omega_table(rs, int(rs.delta.sum()) + 1)}
    assert vals == {Q, -X, Q * (Q + r)}


@pytest.mark.parametrize("r", [3, 4])
def test_closed_equals_ar(r):
    rs = build(r)
    assert series_diff(a_series_closed(rs, 6), a_series_ar(rs, 6)) == []


def test_a3_closed_expression():
    assert a3_special_series(6) == a_series_closed(build(3), 6)


def test_c2():
    lhs, rhs = c2_series(6)
    assert lhs == rhs
    dt = {e.d: e.value for e in extract_dt(rhs)}
    assert dt == {(1, 0): -X, (0, 1): -X, (1, 1): Q}


def test_extract_dt_simple():
    A = pleth_exp(Series.variable(2, 5, 0, Q / (Q - 1)))
    assert [(e.d, e.value) for e in extract_dt(A)] == [((1, 0), Q)]


@pytest.mark.parametrize("r", [3, 4, 5])
def test_round_trip(r):
    rs = build(r)
    assert extract_dt(a_series_closed(rs, 5), rs) == omega_table(rs, 5)
    plain = extract_dt(a_series_closed(rs, 5))
    assert [(e.d, e.value) for e in plain] == [(e.d, e.value) for e in omega_table(rs, 5)]


def test_ncdt():
    exp_side, product_side = ncdt_series(8)
    assert exp_side == product_side
    assert exp_side[(1, 0, 0, 0)] == -1
    assert exp_side[(1, 1, 0, 0)] == 1
    assert exp_side[(1, 1, 1, 1)] == 4
    assert all(isinstance(c, int) for _, c in exp_side.items())
    with pytest.raises(ValueError):
        ncdt_series(8, build(4))


@pytest.mark.parametrize("ell", [1, 2])
def test_integrality(ell):
    """c_d [G_d] (-x)^(-s(d,d)) is an integer polynomial in q (it counts points)."""
    rs = build(ell + 2)
    A = a_series_closed(rs, 5)
    for d in degree_simplex(rs.n, 5, start=1):
        g = prod((gl_motive(k) for k in d), start=Scalar(1))
        P = clear_to_q_polynomial(A[d] * g, s_form(rs, d, d))
        assert all(isinstance(c, int) for _, c in P)


def test_two_crossing_lines():
    # d = e_0 + e_2 on D^_4: R(J_I, d) = {(a, phi) : a phi = 0}, two lines through a point
    rs = build(4)
    d = (1, 0, 1, 0, 0)
    A = a_series_closed(rs, 2)
    g = prod((gl_motive(k) for k in d), start=Scalar(1))
    assert clear_to_q_polynomial(A[d] * g, s_form(rs, d, d)) == [(0, -1), (1, 2)]


def test_series_requires_positive_order():
    with pytest.raises(ValueError):
        a_series_closed(build(3), 0)


def test_table_small_degrees():
    rs = build(4)
    table = omega_table(rs, 1)
    assert {e.d: e.value for e in table} == {(1, 0, 0, 0, 0): -X, (0, 1, 0, 0, 0): -X,
                                         (0, 0, 1, 0, 0): Q, (0, 0, 0, 1, 0): -X,
                                         (0, 0, 0, 0, 1): -X}
    for r in range(3, 8):
        assert len(omega_table(build(r), 1)) == r + 1


def test_closed_series_low_coefficients():
    A = a_series_closed(build(3), 3)
    assert A[(0, 0, 0, 0)] == 1
    assert A[(1, 0, 0, 0)] == -X / (Q - 1)
    assert A[(1, 1, 0, 0)] == Q * Q / (Q - 1) ** 2
    assert a3_special_series(2)[(1, 0, 0, 0)] == -X / (Q - 1)


def test_c2_low_coefficients():
    lhs, rhs = c2_series(3)
    for side in (lhs, rhs):
        assert side[(1, 0)] == -X / (Q - 1)
        assert side[(1, 1)] == Q * Q / (Q - 1) ** 2
