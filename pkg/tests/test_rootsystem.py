from __future__ import annotations

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dihedraldt.rootsystem import (
    ImaginaryRoot,
    QuiverD,
    RealRoot,
    SigmaPairSum,
    build,
    classify,
    epsilon_roots,
    euler_form,
    exceptional_orbits,
    p_parity,
    positive_roots,
    s_form,
    tube_quasisimples,
)

from oracles import tau_basis_images, unit


def test_orientation():
    assert QuiverD.standard(3).arrows == ((0, 2), (0, 3), (1, 2), (1, 3))
    assert QuiverD.standard(5).arrows == ((0, 2), (1, 2), (2, 3), (3, 4), (3, 5))
    with pytest.raises(ValueError):
        build(2)


@pytest.mark.parametrize("r", range(3, 9))
def test_coxeter_basics(r):
    rs = build(r)
    assert np.array_equal(rs.coxeter @ rs.proj, -rs.inj)
    assert round(abs(np.linalg.det(rs.coxeter))) == 1
    assert np.array_equal(rs.coxeter @ rs.coxeter_inverse, np.eye(rs.n, dtype=np.int64))
    assert np.array_equal(rs.tau(rs.delta), rs.delta)
    S = rs.sigma_matrix
    assert np.array_equal(rs.coxeter @ S, S @ rs.coxeter)
    assert euler_form(rs, rs.delta, rs.delta) == 0


@pytest.mark.parametrize("r", [4, 5, 6])
def test_tau_closed_formulas(r):
    rs = build(r)
    for k, image in tau_basis_images(r).items():
        assert np.array_equal(rs.tau(unit(rs.n, k)), image), k
    # alternation on e_0 - e_1 and e_{r-1} - e_r
    a = unit(rs.n, 0) - unit(rs.n, 1)
    assert np.array_equal(rs.tau(a), -a)


def test_tau_at_r3():
    rs = build(3)
    # only the e_{r-1}, e_r and alternation formulas survive when the middle chain is empty
    for k, image in {2: -rs.rho + unit(4, 3), 3: -rs.rho + unit(4, 2)}.items():
        assert np.array_equal(rs.tau(unit(4, k)), image)
    a = unit(4, 0) - unit(4, 1)
    assert np.array_equal(rs.tau(a), -a)


vectors5 = st.lists(st.integers(-3, 3), min_size=5, max_size=5)


@settings(max_examples=60, deadline=None)
@given(vectors5, vectors5)
def test_euler_form_symmetries(d, e):
    rs = build(4)
    anti = euler_form(rs, d, e) - euler_form(rs, e, d)
    assert anti == -(euler_form(rs, e, d) - euler_form(rs, d, e))
    assert euler_form(rs, d, d) == euler_form(rs, rs.apply_sigma(d), rs.apply_sigma(d))
    assert s_form(rs, d, e) == euler_form(rs, d, e) - euler_form(rs, d, rs.apply_sigma(e))


def test_classify_examples():
    rs = build(3)
    assert classify(rs, (1, 1, 0, 0)) == SigmaPairSum((1, 0, 0, 0))
    assert classify(rs, (0, 0, 1, 1)) == SigmaPairSum((0, 0, 1, 0))
    assert classify(rs, (1, 1, 1, 1)) == ImaginaryRoot(1)
    assert classify(rs, (2, 0, 0, 0)) is None
    assert classify(rs, (0, 0, 1, 0)) == RealRoot(1)
    assert classify(rs, (1, 0, 1, 0)) == RealRoot(0)
    with pytest.raises(ValueError):
        classify(rs, (0, 0, 0, 0))
    with pytest.raises(ValueError):
        classify(rs, (1, -1, 0, 0))


@pytest.mark.parametrize("r", [3, 4, 5])
def test_box_scan_matches_epsilon_model(r):
    rs = build(r)
    scanned = {d for d, cls in positive_roots(rs, 12) if not isinstance(cls, SigmaPairSum)}
    assert scanned == epsilon_roots(rs, 12)


@pytest.mark.parametrize("r", [3, 4, 5])
def test_classes_are_disjoint_and_well_formed(r):
    rs = build(r)
    for d, cls in positive_roots(rs, 8):
        chi = euler_form(rs, d, d)
        if isinstance(cls, SigmaPairSum):
            assert chi == 2
            w = cls.witness
            assert tuple(a + b for a, b in zip(w, rs.apply_sigma(w))) == d
            assert p_parity(rs, w) == 1
        elif isinstance(cls, ImaginaryRoot):
            assert chi == 0 and np.array_equal(np.array(d), cls.n * rs.delta)
        else:
            assert chi == 1 and cls.p == p_parity(rs, d)


@pytest.mark.parametrize("r", [3, 4, 5])
def test_exceptional_orbits_are_parity_one_roots(r):
    rs = build(r)
    real_p1 = {d for d, cls in positive_roots(rs, 12)
               if isinstance(cls, RealRoot) and cls.p == 1}
    assert exceptional_orbits(rs, 12) == real_p1


@pytest.mark.parametrize("r", [3, 4, 5, 6])
def test_tubes(r):
    rs = build(r)
    R1, R2, R3 = tube_quasisimples(rs)
    assert sum(np.array(R1)).tolist() == rs.delta.tolist()
    assert sum(np.array(R2)).tolist() == rs.delta.tolist()
    assert len(R3) == (0 if r == 3 else r - 2)
    if R3:
        assert sum(np.array(R3)).tolist() == rs.delta.tolist()
    for tube in (R1, R2, R3):
        # tau permutes each tube cyclically
        assert {tuple(rs.tau(v)) for v in tube} == set(tube)
    # Sigma acts as tau on R1, R2 and as the identity on R3
    for v in R1 + R2:
        assert rs.apply_sigma(v) == tuple(rs.tau(v))
    for v in R3:
        assert rs.apply_sigma(v) == v


def test_to_json_shape():
    data = build(4).to_json()
    assert data["delta"] == [1, 1, 2, 1, 1]
    assert data["sigma"] == [1, 0, 2, 4, 3]


def test_tube_examples_r4():
    rs = build(4)
    R1, R2, R3 = tube_quasisimples(rs)
    assert R3 == [(0, 0, 1, 0, 0), (1, 1, 1, 1, 1)]
    # widths 2 + 2 + (r - 2) count the r + 2 non-homogeneous period-delta classes
    assert len(R1) + len(R2) + len(R3) == rs.r + 2


@pytest.mark.parametrize("r", [4, 5, 6])
def test_sigma_tau_on_injectives(r):
    rs = build(r)
    for k in (0, 1, r - 1, r):
        I = rs.inj[:, k]
        assert rs.apply_sigma(rs.tau(I)) == tuple(unit(rs.n, 2) + I)


def test_exceptional_orbits_r3_examples():
    found = exceptional_orbits(build(3), 5)
    assert (1, 0, 0, 0) in found and (2, 1, 1, 1) in found
