import math

import pytest
from hypothesis import given, strategies as st

from kerrlcs import ad
from kerrlcs.ad import (CScalar, Scalar, gradient, hessian, lift_vars,
                        make_vars, partials_of, value_of)
from kerrlcs.errors import ConfigurationError, DomainError

finite = st.floats(min_value=-10.0, max_value=10.0,
                   allow_nan=False, allow_infinity=False)
positive = st.floats(min_value=0.1, max_value=10.0)


def test_make_vars_seeds_identity():
    x, y, z = make_vars((1.0, 2.0, 3.0))
    assert x.val == 1.0 and x.d == (1.0, 0.0, 0.0)
    assert z.d == (0.0, 0.0, 1.0)


def test_make_vars_rejects_bad_counts():
    with pytest.raises(ConfigurationError):
        make_vars(())
    with pytest.raises(ConfigurationError):
        make_vars((1.0,) * 5)


@given(finite, finite)
def test_product_rule(a, b):
    x, y = make_vars((a, b))
    f = x * y + x
    assert partials_of(f, 2) == pytest.approx((b + 1.0, a))


@given(positive)
def test_chain_rule_log_exp(a):
    (x,) = make_vars((a,))
    f = ad.log(ad.exp(x) + 1.0)
    expected = math.exp(a) / (math.exp(a) + 1.0)
    assert partials_of(f, 1)[0] == pytest.approx(expected, rel=1e-12)


@given(finite, finite)
def test_atan2_gradient(a, b):
    if a * a + b * b < 1e-6:
        return
    x, y = make_vars((b, a))
    f = ad.atan2(y, x)
    gx, gy = partials_of(f, 2)
    r2 = a * a + b * b
    assert gx == pytest.approx(-a / r2, rel=1e-10, abs=1e-12)
    assert gy == pytest.approx(b / r2, rel=1e-10, abs=1e-12)


def test_division_and_pow():
    x, y = make_vars((3.0, 2.0))
    f = (x / y) ** 2
    assert value_of(f) == pytest.approx(2.25)
    assert partials_of(f, 2) == pytest.approx((1.5, -2.25))


def test_domain_errors():
    (x,) = make_vars((-1.0,))
    with pytest.raises(DomainError):
        ad.sqrt(x)
    with pytest.raises(DomainError):
        ad.log(x)
    with pytest.raises(DomainError):
        ad.arccos(x * 2.0)


def test_hessian_symmetric_and_exact():
    def f(xs):
        x, y = xs
        return ad.sin(x) * ad.exp(y) + x * x * y

    H = hessian(f, (0.7, -0.3))
    x0, y0 = 0.7, -0.3
    assert H[0][0] == pytest.approx(-math.sin(x0) * math.exp(y0) + 2 * y0)
    assert H[0][1] == pytest.approx(math.cos(x0) * math.exp(y0) + 2 * x0)
    assert H[0][1] == pytest.approx(H[1][0])
    assert H[1][1] == pytest.approx(math.sin(x0) * math.exp(y0))


def test_nested_lift_over_lifted_point():
    outer = make_vars((1.0, 2.0))
    inner = lift_vars(outer)
    f = inner[0] * inner[1]
    p = partials_of(f, 2)
    # inner partials are Scalars carrying the outer derivative layer
    assert value_of(p[0]) == 2.0 and value_of(p[1]) == 1.0


def test_gradient_matches_closed_form():
    def f(xs):
        x, y, z = xs
        return ad.sqrt(x * x + y * y + z * z)

    g = gradient(f, (1.0, 2.0, 2.0))
    assert g == pytest.approx((1 / 3, 2 / 3, 2 / 3))


def test_cscalar_field_ops():
    a = CScalar(1.0, 2.0)
    b = CScalar(-3.0, 0.5)
    prod = a * b
    assert value_of(prod.re) == pytest.approx(1.0 * -3.0 - 2.0 * 0.5)
    assert value_of(prod.im) == pytest.approx(1.0 * 0.5 + 2.0 * -3.0)
    quot = (a / b) * b
    assert value_of(quot.re) == pytest.approx(1.0)
    assert value_of(quot.im) == pytest.approx(2.0)


def test_partials_of_constant():
    assert partials_of(4.2, 3) == (0.0, 0.0, 0.0)


def test_partials_of_mismatched_arity():
    (x,) = make_vars((1.0,))
    with pytest.raises(ConfigurationError):
        partials_of(x, 2)
