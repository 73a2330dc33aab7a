import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from qsvand.horner import ss_to_qs
from qsvand.poly_systems import build_vandermonde, make_system, monomial
from qsvand.recurrence import (base_generators, build_mn, qs_matvec, qs_solve,
                               shifted_generators, superdiagonal_tau, trailing_submatrix)
from qsvand.sampling import random_nodes, random_system
from support import FAMILIES, coefficient_matrix


def test_monomial_matrices():
    mn = build_mn(monomial(3))
    assert np.array_equal(mn.mq, np.eye(3))
    assert np.array_equal(mn.nq, np.diag([1.0, 1.0], 1))


def test_qs_all_ones():
    sys = make_system("qs", 4, alpha=1.0, beta=1.0, gamma=1.0, delta=1.0)
    M = build_mn(sys).mq
    assert M[0, 2] == -1.0 and M[0, 3] == -1.0 and M[1, 3] == -1.0
    assert M[0, 1] == 0.0 and M[1, 2] == 0.0 and M[2, 3] == 0.0


@pytest.mark.parametrize("family", FAMILIES)
def test_mq_matches_interpolated_coefficients(family, rng):
    sys = random_system(family, 9, rng, tau0=1.4)
    M = build_mn(sys).mq
    assert np.abs(M - coefficient_matrix(sys)).max() <= 1e-10 * max(1.0, np.abs(M).max())


@pytest.mark.parametrize("family", FAMILIES)
def test_superdiagonals(family, rng):
    sys = random_system(family, 7, rng)
    mn = build_mn(sys)
    a, b, c, d, t = sys.alpha, sys.beta, sys.gamma, sys.delta, sys.theta
    k = np.arange(1, 7)
    if family == "qs":
        expect = -t[k]
    elif family == "ss":
        expect = -(t[k] + c[k] * b[k - 1])
    else:
        expect = d[k] + b[k] / np.r_[1.0, a[1:-1]]
    assert np.allclose(np.diag(mn.mq, 1), expect, rtol=1e-15, atol=0)
    # N_Q is placed directly, so it is exact
    assert np.array_equal(np.diag(mn.nq, 1), sys.tau[1:])
    assert np.count_nonzero(mn.nq) == np.count_nonzero(sys.tau[1:])
    assert np.array_equal(superdiagonal_tau(sys)[:-1], sys.tau[1:])


@pytest.mark.parametrize("family", FAMILIES)
def test_rank_one_displacement_of_vandermonde(family, rng):
    n = 8
    sys = random_system(family, n, rng, tau0=0.8)
    x = random_nodes(n, rng)
    V = build_vandermonde(sys, x)
    mn = build_mn(sys)
    res = V @ mn.mq - np.diag(x) @ V @ mn.nq
    expect = np.zeros((n, n))
    expect[:, 0] = 0.8
    assert np.abs(res - expect).max() <= 1e-12 * np.abs(V).max()


def test_ss_matrices_match_qs_embedding(rng):
    sys = random_system("ss", 9, rng)
    a = build_mn(sys)
    b = build_mn(ss_to_qs(sys))
    assert np.allclose(a.mq, b.mq, rtol=0, atol=1e-12)
    assert np.array_equal(a.nq, b.nq)


def test_wf_three_term_is_banded():
    sys = make_system("wf", 7, alpha=2.0, delta=0.3, gamma=1.0)
    M = build_mn(sys).mq
    assert np.all(np.triu(M, 3) == 0.0)


@pytest.mark.parametrize("family", FAMILIES)
@pytest.mark.parametrize("xi", [0.0, 0.7, -1.3])
def test_generator_reconstruction(family, xi, rng):
    sys = random_system(family, 10, rng)
    mn = build_mn(sys)
    dense = shifted_generators(sys, xi).dense()
    assert np.abs(dense - (mn.mq - xi * mn.nq)).max() <= 1e-14 * max(1.0, np.abs(mn.mq).max())


def test_monomial_generators_are_identity():
    assert np.array_equal(shifted_generators(monomial(5), 0.0).dense(), np.eye(5))
    gens = base_generators(monomial(5))
    assert np.all(gens.d == 1.0)


def test_qs_solve_first_row_of_inverse(rng):
    sys = random_system("qs", 6, rng)
    m = shifted_generators(sys, 1.3)
    e1 = np.eye(6)[0]
    assert np.allclose(qs_solve(m, e1), np.linalg.inv(m.dense())[0], rtol=1e-12, atol=1e-12)


def test_qs_solve_identity():
    r = np.arange(1.0, 6.0)
    assert np.array_equal(qs_solve(shifted_generators(monomial(5), 0.0), r), r)


def test_qs_solve_linear(rng):
    sys = random_system("wf", 8, rng)
    m = shifted_generators(sys, 0.4)
    r1, r2 = rng.standard_normal((2, 8))
    lhs = qs_solve(m, 2.0 * r1 - 3.0 * r2)
    rhs = 2.0 * qs_solve(m, r1) - 3.0 * qs_solve(m, r2)
    assert np.allclose(lhs, rhs, rtol=1e-12, atol=1e-12)


@pytest.mark.parametrize("family", FAMILIES)
def test_matvec_rows_and_dense(family, rng):
    sys = random_system(family, 8, rng)
    m = shifted_generators(sys, 0.9)
    D = m.dense()
    for j in range(8):
        assert np.allclose(qs_matvec(m, np.eye(8)[j]), D[j], rtol=1e-14, atol=1e-14)
    v = rng.standard_normal(8)
    assert np.allclose(qs_matvec(m, v), v @ D, rtol=1e-12, atol=1e-12)


def test_matvec_length_mismatch(rng):
    m = shifted_generators(random_system("qs", 5, rng), 0.0)
    with pytest.raises(ValueError):
        qs_matvec(m, np.ones(4))
    with pytest.raises(ValueError):
        qs_solve(m, np.ones(6))


@settings(max_examples=25, deadline=None)
@given(st.sampled_from(FAMILIES), st.integers(2, 64), st.integers(0, 2**31))
def test_solve_inverts_matvec(family, n, seed):
    rng = np.random.default_rng(seed)
    m = shifted_generators(random_system(family, n, rng), 0.0)
    v = rng.standard_normal(n)
    back = qs_solve(m, qs_matvec(m, v))
    assert np.abs(back - v).max() <= 1e-10 * max(1.0, np.abs(v).max())


@pytest.mark.parametrize("family", FAMILIES)
def test_trailing_submatrix(family, rng):
    sys = random_system(family, 7, rng)
    m = shifted_generators(sys, 0.6)
    D = m.dense()
    assert np.array_equal(trailing_submatrix(m, 1).dense(), D)
    assert np.allclose(trailing_submatrix(m, 3).dense(), D[2:, 2:], rtol=1e-15, atol=1e-15)
    assert np.array_equal(trailing_submatrix(m, 7).dense(), [[1.0]])
    with pytest.raises(IndexError):
        trailing_submatrix(m, 0)
    with pytest.raises(IndexError):
        trailing_submatrix(m, 8)
