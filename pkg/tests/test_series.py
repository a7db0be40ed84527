import math

import numpy as np
from hypothesis import given, settings
from hypothesis import strategies as st
from pytest import approx, mark, raises

from hblab.errors import BranchPointError, DomainError, EvaluationError
from hblab.series import (
    TaylorSeries,
    cauchy_product,
    coefficients_via_cauchy,
    evaluate,
    exp_series,
    integrate,
    log_series,
    ray_integral,
)

# series of order >= 1; order 0 differentiates to the degenerate zero series
coefficients = st.lists(
    st.complex_numbers(max_magnitude=10, allow_nan=False, allow_infinity=False), min_size=2, max_size=24
)


def test_order_pads_and_truncates():
    assert TaylorSeries([1, 2], order=4).coeffs.tolist() == [1, 2, 0, 0, 0]
    assert TaylorSeries([1, 2, 3, 4], order=1).coeffs.tolist() == [1, 2]
    assert TaylorSeries([1, 2, 3]).order == 2


@mark.parametrize("coeffs, order", [([], None), ([1.0], -1), ([1.0, np.nan], None)])
def test_invalid_series(coeffs, order):
    with raises(DomainError):
        TaylorSeries(coeffs, order=order)


def test_arithmetic_keeps_smaller_order():
    a = TaylorSeries([1, 1, 1, 1])
    b = TaylorSeries([1, -1])
    assert (a + b).order == 1
    assert (a * b).order == 1
    assert (a - 1).coeffs.tolist() == [0, 1, 1, 1]
    assert (2 * b).coeffs.tolist() == [2, -2]


def test_product_with_geometric_series():
    geometric = TaylorSeries(np.ones(20))
    one = cauchy_product(TaylorSeries([1, -1], order=19), geometric)
    assert one.coeffs == approx(np.eye(1, 20)[0])


@given(coefficients)
def test_integrate_inverts_differentiate(c):
    s = TaylorSeries(c)
    back = s.deriv().integ(s[0])
    assert back.order == s.order
    assert np.allclose(back.coeffs, s.coeffs, rtol=1e-12, atol=1e-12)


def test_derivative_of_constant_series():
    s = TaylorSeries([2.5])
    d = s.deriv()
    assert d.order == 0
    assert d.coeffs.tolist() == [0]
    back = d.integ(s[0])
    assert back.order == 1
    assert back.coeffs.tolist() == [2.5, 0]


@given(st.lists(st.complex_numbers(max_magnitude=0.5, allow_nan=False, allow_infinity=False), min_size=1, max_size=8))
@settings(max_examples=50)
def test_exp_inverts_log(tail):
    s = TaylorSeries([1.0] + tail)
    assert np.allclose(exp_series(log_series(s)).coeffs, s.coeffs, atol=1e-10)


def test_exp_of_identity():
    e = exp_series(TaylorSeries([0, 1], order=10))
    assert e.coeffs.real == approx([1 / math.factorial(n) for n in range(11)])


def test_log_of_one_minus_z():
    s = log_series(TaylorSeries([1, -1], order=8))
    assert s.coeffs.real == approx([0] + [-1 / n for n in range(1, 9)])


def test_log_needs_nonzero_constant():
    with raises(BranchPointError):
        log_series(TaylorSeries([0, 1]))


def test_evaluate_derivatives():
    s = TaylorSeries([1, 2, 3])
    assert evaluate(s, 0.5) == approx(1 + 1 + 0.75)
    assert evaluate(s, 0.5, derivative=1) == approx(2 + 3)
    assert evaluate(s, [0.0, 1.0], derivative=2) == approx([6, 6])
    assert s(0.5) == evaluate(s, 0.5)


def test_integrate_constant():
    assert integrate(TaylorSeries([2.0]), 5.0).coeffs.tolist() == [5, 2]


def test_cauchy_coefficients_of_geometric_series():
    c = coefficients_via_cauchy(lambda z: 1 / (1 - z), 40)
    assert np.max(np.abs(c.coeffs - 1)) < 1e-12


def test_cauchy_coefficients_accept_parts():
    class Part(object):
        value = staticmethod(np.exp)

    c = coefficients_via_cauchy(Part(), 10, r=0.5)
    assert c.coeffs.real == approx([1 / math.factorial(n) for n in range(11)], abs=1e-13)


@mark.parametrize("r, m", [(0.0, None), (1.0, None), (0.5, 10)])
def test_cauchy_arguments(r, m):
    with raises(DomainError):
        coefficients_via_cauchy(np.exp, 8, r=r, m=m)


def test_cauchy_rejects_non_finite_samples():
    with raises(EvaluationError) as e:
        coefficients_via_cauchy(lambda z: np.where(z.real > 0.7, np.inf, 1.0), 8)
    assert e.value.point.real > 0.7


@mark.parametrize("z", [0.5, -0.9j, 1 - 2.0 ** -20, 0.3 + 0.6j])
def test_ray_integral_near_boundary(z):
    assert ray_integral(lambda w: 1 / (1 - w), z) == approx(-np.log(1 - z), rel=1e-9)


def test_ray_integral_shape_and_offset():
    z = np.array([[0.1, 0.2], [0.3, 0.4]])
    out = ray_integral(lambda w: np.ones_like(w), z, value0=1.0)
    assert out.shape == (2, 2)
    assert out == approx(z + 1)
