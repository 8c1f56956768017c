import math
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from pascal_prolate.genfun import theorem_A_poly
from pascal_prolate.padic import (
    TruncatedSeries,
    U_n_poly,
    coefficientwise_agreement,
    hypergeometric_ode_check,
    padic_congruence_check,
    period_series,
    symmetric_square_ode_check,
)
from pascal_prolate.poly import DensePoly

F = Fraction


def test_period_series_coefficients():
    s = period_series(3)
    assert s.known() == [1, F(1, 4), F(9, 64)]
    with pytest.raises(IndexError):
        s[3]
    with pytest.raises(ValueError):
        period_series(0)


def test_period_series_matches_central_binomials():
    # ((1/2)_k / k!)^2 = binom(2k, k)^2 / 16^k
    s = period_series(30)
    for k in range(30):
        assert s[k] == F(math.comb(2 * k, k) ** 2, 16**k)


def test_truncation_order_tracking():
    a = TruncatedSeries([1, 2, 3], 3)
    z = TruncatedSeries.exact(DensePoly([0, 1]))
    assert (a * z).order == 4
    assert (a + z).order == 3
    assert a.derivative().order == 2
    assert (z * z).order == math.inf


@given(st.lists(st.integers(-9, 9), min_size=1, max_size=6),
       st.lists(st.integers(-9, 9), min_size=1, max_size=6))
def test_product_agrees_with_polynomials_where_known(a, b):
    A, B = TruncatedSeries(a, len(a)), TruncatedSeries(b, len(b))
    prod = (DensePoly(a) * DensePoly(b))
    C = A * B
    for k in range(int(C.order)):
        assert C[k] == prod[k]


@pytest.mark.parametrize("K", [4, 10, 50])
def test_hypergeometric_ode(K):
    assert hypergeometric_ode_check(K)


@pytest.mark.parametrize("K", [5, 10, 50])
def test_symmetric_square_ode(K):
    assert symmetric_square_ode_check(K)


def test_negative_controls():
    assert not hypergeometric_ode_check(10, TruncatedSeries.exact(1))
    assert not symmetric_square_ode_check(10, TruncatedSeries.exact(DensePoly([0, 1])))
    # F itself (not F^2) is not a solution of the third-order equation
    assert not symmetric_square_ode_check(10, period_series(10))


def test_U_n_examples():
    assert U_n_poly(3, 1) == DensePoly([1, -1, -2])
    assert U_n_poly(5, 1) == theorem_A_poly(4)
    U = U_n_poly(3, 2)
    assert U.degree == 8 and U[0] == 1
    with pytest.raises(ValueError):
        U_n_poly(2, 1)
    with pytest.raises(ValueError):
        U_n_poly(3, 0)


def test_padic_examples():
    rep = padic_congruence_check(3, 1, [1])
    assert rep.ok and rep.details == [(1, 1, 1)]
    assert padic_congruence_check(3, 2, range(1, 6)).ok
    assert padic_congruence_check(5, 2, range(1, 6)).ok


@pytest.mark.parametrize("p,n", [(3, 1), (3, 2), (3, 3), (5, 1), (5, 2)])
def test_padic_congruence(p, n):
    rep = padic_congruence_check(p, n, range(1, 11))
    assert rep.ok, rep.witness


def test_padic_negative_control():
    # at a unit z the congruence is not claimed; with a perturbed U it must fail
    U = U_n_poly(3, 2) + 1
    assert not padic_congruence_check(3, 2, [1], U=U).ok


def test_coefficientwise_is_only_diagnostic():
    agree = coefficientwise_agreement(3, 2)
    assert 0 in agree
    assert len(agree) < U_n_poly(3, 2).degree + 1
