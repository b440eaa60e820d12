"""Exterior-algebra arithmetic, conjugation, dual-pair construction, and
the ordinary/super trace identity."""

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from rmtcorr.grassmann import (GrassmannElement, AlgebraMatrix, ge_mul,
                               ge_conjugate, build_dual_pair, tr_power,
                               strg_power, verify_duality)


def gen(idx, ngen=6):
    return GrassmannElement.generator(ngen, idx)


def test_generators_anticommute():
    a, b = gen(0), gen(1)
    lhs = ge_mul(a, b)
    rhs = ge_mul(b, a)
    assert (lhs + rhs).max_abs_coeff() == 0.0


def test_generator_squares_to_zero():
    a = gen(0)
    assert ge_mul(a, a).max_abs_coeff() == 0.0


def test_nilquadratic_bivector_squares_add():
    one = GrassmannElement.scalar(6, 1.0)
    t12 = ge_mul(gen(0), gen(1))
    e = one + t12
    sq = ge_mul(e, e)
    expect = one + 2.0 * t12
    assert (sq - expect).max_abs_coeff() < 1e-14


def test_conjugate_scalar():
    c = GrassmannElement.scalar(4, 2.0 - 3.0j)
    assert ge_conjugate(c).scalar_part() == 2.0 + 3.0j


def test_conjugate_reverses_and_swaps():
    # conj(theta_0 theta_1) = theta_1* theta_0* = -theta_0* theta_1*
    e = ge_mul(gen(0, 4), gen(1, 4))
    c = ge_conjugate(e)
    expect = -1.0 * ge_mul(gen(2, 4), gen(3, 4))
    assert (c - expect).max_abs_coeff() == 0.0


def test_conjugate_involution():
    rng = np.random.default_rng(3)
    e = GrassmannElement(8, {int(m): complex(*rng.standard_normal(2))
                            for m in rng.integers(0, 256, size=12)})
    back = ge_conjugate(ge_conjugate(e))
    assert (back - e).max_abs_coeff() < 1e-12


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 2 ** 6 - 1), st.integers(0, 2 ** 6 - 1),
       st.integers(0, 2 ** 6 - 1))
def test_product_associative(m1, m2, m3):
    a = GrassmannElement(6, {m1: 0.7 + 0.2j, 0: 1.0})
    b = GrassmannElement(6, {m2: -1.3j, 1: 0.5})
    c = GrassmannElement(6, {m3: 2.0, 2: -0.25})
    lhs = ge_mul(ge_mul(a, b), c)
    rhs = ge_mul(a, ge_mul(b, c))
    assert (lhs - rhs).max_abs_coeff() < 1e-12


def test_mismatched_universes_rejected():
    with pytest.raises(ValueError):
        ge_mul(gen(0, 4), gen(0, 6))


def test_dual_pair_k_hermitean():
    rng = np.random.default_rng(11)
    z = [rng.standard_normal(2) + 1j * rng.standard_normal(2)]
    K, B = build_dual_pair(z, 1, 2, [1])
    Kd = K.conjugate_transpose()
    for i in range(2):
        for j in range(2):
            assert (K.entries[i][j] - Kd.entries[i][j]).max_abs_coeff() < 1e-12


def test_dual_pair_b_pseudo_hermitean():
    # graded adjoint (odd blocks pick up a minus sign): B^dagger = L B L
    # with L = diag(L_1..L_k, 1..1)
    rng = np.random.default_rng(5)
    for Lsign in (1, -1):
        z = [rng.standard_normal(2) + 1j * rng.standard_normal(2)]
        K, B = build_dual_pair(z, 1, 2, [Lsign])
        Lfull = [Lsign, 1]
        for i in range(2):
            for j in range(2):
                grade = -1.0 if (i < 1) != (j < 1) else 1.0
                dag = grade * ge_conjugate(B.entries[j][i])
                lbl = Lfull[i] * Lfull[j] * B.entries[i][j]
                assert (dag - lbl).max_abs_coeff() < 1e-12


def test_trace_identity_first_power():
    rng = np.random.default_rng(7)
    z = [rng.standard_normal(3) + 1j * rng.standard_normal(3)]
    K, B = build_dual_pair(z, 1, 3, [1])
    diff = tr_power(K, 1) - strg_power(B, 1)
    assert diff.max_abs_coeff() < 1e-12


@pytest.mark.parametrize("k,N", [(1, 2), (1, 4), (2, 2), (2, 3)])
def test_trace_identity_all_powers(k, N):
    rep = verify_duality(k, N, 4, seed=42)
    assert max(rep.values()) < 1e-10


def test_zero_sources_pure_odd_sector():
    K, B = build_dual_pair([np.zeros(2)], 1, 2, [1])
    for i in range(2):
        for j in range(2):
            assert abs(K.entries[i][j].scalar_part()) == 0.0
    assert abs(B.entries[0][0].scalar_part()) == 0.0
    diff = tr_power(K, 2) - strg_power(B, 2)
    assert diff.max_abs_coeff() < 1e-12


def test_generator_budget_enforced():
    with pytest.raises(ResourceWarning):
        build_dual_pair([np.ones(7), np.ones(7)], 2, 7, [1, 1])
