from __future__ import annotations

import math
from fractions import Fraction as F

import pytest

from torus_surgery import closed_form as cf
from torus_surgery import engine


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_specialization_to_trefoil(k):
    for i in range(1, 2 * k + 1):
        assert cf.two_q_positive(3, k, 1, i) == cf.trefoil_positive(k, i)
        assert cf.two_q_negative(3, k, 1, i) == cf.trefoil_negative(k, i)


def test_trefoil_examples():
    assert cf.trefoil_positive(1, 1) == (0, F(1, 120), F(59, 30))
    assert cf.trefoil_positive(1, 2) == (0, F(-71, 120), F(131, 30))
    assert cf.trefoil_negative(1, 1) == (2, F(215, 168), F(37, 42))
    assert cf.trefoil_negative(1, 2) == (6, F(479, 168), F(109, 42))
    v = cf.trefoil_positive(2, 3)
    assert (v.sf, v.cs) == (-2, -4 + F(625, 264))
    v = cf.trefoil_negative(2, 2)
    assert (v.sf, v.cs) == (4, 4 - F(23 * 23, 24 * 13))


def test_two_q_examples():
    assert cf.two_q_positive(5, 1, 1, 1)[:2] == (0, F(1, 360))
    assert cf.two_q_positive(5, 1, 2, 1).sf == 2
    assert cf.two_q_negative(3, 1, 1, 1)[:2] == (2, F(215, 168))
    assert cf.two_q_negative(5, 1, 1, 1).cs == F(-361, 440) + 2
    assert cf.two_q_negative(7, 2, 3, 1).sf == 4


def test_two_q_dispatch_and_domain():
    assert cf.two_q(5, -2, 1, 3) == cf.two_q_negative(5, 2, 1, 3)
    with pytest.raises(ValueError):
        cf.two_q(3, 0, 1, 1)
    with pytest.raises(ValueError):
        cf.two_q_positive(3, 1, 1, 3)


@pytest.mark.parametrize("q, k, ell, i, value", [
    (3, 1, 1, 1, -1), (9, 4, 2, 24, -6), (5, 2, 1, 8, -4),
])
def test_floor_examples(q, k, ell, i, value):
    assert cf.floor_terms(q, k, ell, i) == (value,) * 3


def test_floor_identities_exhaustive():
    count = 0
    for q, k, ell, i in cf.floor_identity_domain(15, 6):
        x = F(4 * q * (1 - i) - 2 * ell + 1, 4 * q * k - 2)
        assert 0 < x + F(i, k) < F(1, k)
        assert cf.floor_identities(q, k, ell, i)
        count += 1
    assert count > 5000


def test_engine_agrees_with_closed_forms():
    n = 0
    for q in cf.SUPPORTED_Q:
        for k in (-4, -3, -2, -1, 1, 2, 3, 4):
            for r in engine.all_invariants(q, k):
                assert (r.sf, r.cs, r.rho) == tuple(cf.two_q(q, k, r.ell, r.i))
                n += 1
    assert n == 800


def test_lambda_prime_examples():
    assert cf.lambda_prime(3, 1) == 2
    assert cf.lambda_prime(3, -1) == 4
    assert cf.lambda_prime(5, 2) == 114


def test_lambda_double_prime_examples():
    assert cf.lambda_double_prime(3, 1) == F(-19, 6)
    assert cf.lambda_double_prime(3, -1) == F(73, 42)
    assert cf.lambda_double_prime(5, 1) == F(-1669, 90)
    assert cf.lambda_double_prime(3, 0) == 0


def test_lambda_examples():
    assert cf.lambda_su3(3, 1).total == F(-7, 6)
    assert cf.lambda_su3(3, -1).total == F(241, 42)
    assert cf.lambda_su3(5, 1).total == F(491, 90)
    assert cf.lambda_su3(7, 0).total == 0


@pytest.mark.parametrize("q", cf.SUPPORTED_Q)
def test_tables_valid_for_both_signs(q):
    for k in range(-4, 5):
        for route in ("engine", "formula"):
            assert cf.lambda_double_prime(q, k, route) == cf.table_lambda_double_prime(q, k)
            assert cf.lambda_su3(q, k, route).total == cf.table_lambda(q, k)


def test_trefoil_lambda_formula():
    for k in range(-4, 5):
        assert cf.table_lambda(3, k) == cf.trefoil_lambda(k)


def test_unsupported_q():
    with pytest.raises(cf.UnsupportedKnot):
        cf.lambda_prime(11, 1)
    with pytest.raises(cf.UnsupportedKnot):
        cf.lambda_su3(11, 1)
    # the rho half-sum needs no table
    assert cf.lambda_double_prime(11, 1) == -sum(r.rho for r in engine.all_invariants(11, 1)) / 2


def test_unknown_route():
    with pytest.raises(ValueError):
        cf.rho_values(3, 1, route="guess")


def test_brieskorn_identification():
    assert cf.brieskorn_identification(3, 1) == (-1, (2, 3, 5))
    assert cf.brieskorn_identification(3, -1) == (1, (2, 3, 7))
    assert cf.brieskorn_identification(5, 2) == (-1, (2, 5, 19))
    for q in (3, 5, 7):
        for k in (1, 2, -1, -2):
            sign, (p, qq, r) = cf.brieskorn_identification(q, k)
            assert math.gcd(p, qq) == math.gcd(p, r) == math.gcd(qq, r) == 1
            assert r == abs(2 * q * k - 1)
            assert sign == (-1 if k > 0 else 1)
    with pytest.raises(ValueError):
        cf.brieskorn_identification(3, 0)


def test_casson_su2_trefoil():
    assert [cf.casson_su2_trefoil(k) for k in (1, -1, 2, 0)] == [-1, 1, -2, 0]


def test_finite_type_witness():
    report = cf.finite_type_witness()
    assert report.ks == (1, -1, 2, -2, 3)
    assert report.rows[:3] == [
        (1, -1, 1, F(-7, 6)),
        (-1, 1, 1, F(241, 42)),
        (2, -2, 4, F(79, 33)),
    ]
    assert (report.rank, report.augmented_rank) == (2, 3)
    assert report.inconsistent
    assert "Delta''(1)" in report.notes


def test_finite_type_zero_row():
    report = cf.finite_type_witness(ks=(0,))
    assert report.rows == [(0, 0, 0, 0)]
    assert not report.inconsistent


def test_finite_type_routes_agree():
    assert cf.finite_type_witness(route="formula").rows == cf.finite_type_witness().rows
