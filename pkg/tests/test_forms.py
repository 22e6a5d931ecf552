import itertools
import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from kerrlcs import ad
from kerrlcs.errors import ChartError, DegreeError, SingularMetricError
from kerrlcs.forms import (Chart, ChartMap, STAR_STAR_SIGN, constant_form,
                           coordinate_differential, ext_d, form_from_components,
                           function_form, hodge_star, inverse4,
                           minkowski_metric, pullback, pullback_metric, wedge,
                           MetricField, volume_form, zero_form)

C4 = Chart("test4", ("t", "x", "y", "z"))
C2 = Chart("test2", ("u", "v"))

pt4 = st.tuples(*[st.floats(min_value=-3, max_value=3, allow_nan=False)] * 4)


def random_one_form(chart, coeffs):
    return constant_form(chart, 1, {(i,): c for i, c in enumerate(coeffs)})


@given(pt4)
def test_wedge_anticommutes_on_one_forms(p):
    a = form_from_components(C4, 1, {(0,): lambda q: q[1], (2,): lambda q: 1.0})
    b = form_from_components(C4, 1, {(1,): lambda q: q[0] * q[2], (3,): lambda q: 2.0})
    lhs = wedge(a, b).values_at(p)
    rhs = wedge(b, a).values_at(p)
    for I in lhs:
        assert lhs[I] == pytest.approx(-rhs[I])


def test_wedge_associative():
    p = (0.3, -1.2, 0.8, 2.0)
    a = random_one_form(C4, (1.0, 2.0, 0.0, -1.0))
    b = random_one_form(C4, (0.5, 0.0, 3.0, 1.0))
    c = random_one_form(C4, (-2.0, 1.0, 1.0, 0.0))
    lhs = wedge(wedge(a, b), c).values_at(p)
    rhs = wedge(a, wedge(b, c)).values_at(p)
    for I in lhs:
        assert lhs[I] == pytest.approx(rhs[I])


def test_wedge_rejects_chart_mismatch_and_overdegree():
    a = constant_form(C4, 1, {(0,): 1.0})
    b = constant_form(C2, 1, {(0,): 1.0})
    with pytest.raises(ChartError):
        wedge(a, b)
    top = constant_form(C4, 4, {(0, 1, 2, 3): 1.0})
    with pytest.raises(DegreeError):
        wedge(top, a)


@settings(max_examples=25)
@given(pt4)
def test_d_squared_is_zero(p):
    f = form_from_components(C4, 1, {
        (0,): lambda q: ad.sin(q[1]) * q[3],
        (1,): lambda q: ad.exp(q[2] / 4.0),
        (3,): lambda q: q[0] * q[0] * q[2],
    })
    dd = ext_d(ext_d(f))
    assert max(abs(v) for v in dd.values_at(p).values()) < 1e-12


def test_leibniz_rule():
    p = (0.4, 1.1, -0.6, 0.9)
    f = function_form(C4, lambda q: q[0] * ad.sin(q[1]))
    a = form_from_components(C4, 1, {(2,): lambda q: q[3] * q[3]})
    prod = wedge(f, a)
    lhs = ext_d(prod).values_at(p)
    rhs = (wedge(ext_d(f), a) + wedge(f, ext_d(a))).values_at(p)
    for I in lhs:
        assert lhs[I] == pytest.approx(rhs[I], abs=1e-12)


def test_pullback_naturality_with_d():
    fwd = ChartMap(C2, C4, lambda p: (p[0], p[1], p[0] * p[1],
                                      ad.sin(p[0])))
    a = form_from_components(C4, 1, {
        (0,): lambda q: q[2],
        (3,): lambda q: q[1] * q[3],
    })
    p = (0.7, -0.4)
    lhs = pullback(fwd, ext_d(a)).values_at(p)
    rhs = ext_d(pullback(fwd, a)).values_at(p)
    for I in lhs:
        assert lhs[I] == pytest.approx(rhs[I], abs=1e-12)


def test_pullback_functorial():
    mid = Chart("mid", ("p", "q", "r"))
    f = ChartMap(C2, mid, lambda p: (p[0], p[1], p[0] + p[1]))
    g = ChartMap(mid, C4, lambda p: (p[0], p[1], p[2], p[0] * p[2]))
    a = form_from_components(C4, 2, {
        (0, 3): lambda q: q[1],
        (1, 2): lambda q: 1.0,
    })
    gf = ChartMap(C2, C4, lambda p: g.fn(f.fn(p)))
    pt = (0.3, 0.9)
    lhs = pullback(gf, a).values_at(pt)
    rhs = pullback(f, pullback(g, a)).values_at(pt)
    for I in lhs:
        assert lhs[I] == pytest.approx(rhs[I], abs=1e-12)


def test_minkowski_star_on_basis():
    g = minkowski_metric(C4)
    dt = coordinate_differential(C4, 0)
    dx = coordinate_differential(C4, 1)
    p = (0.0, 0.0, 0.0, 0.0)
    # *dt = -dx^dy^dz, *dx = -dt^dy^dz with signature (-,+,+,+), or=+1
    sdt = hodge_star(g, dt).values_at(p)
    assert sdt[(1, 2, 3)] == pytest.approx(-1.0)
    sdx = hodge_star(g, dx).values_at(p)
    assert sdx[(0, 2, 3)] == pytest.approx(-1.0)


def test_star_star_sign_table():
    g = minkowski_metric(C4)
    p = (0.0, 0.0, 0.0, 0.0)
    rng = np.random.default_rng(11)
    for k in range(5):
        coeffs = {I: rng.uniform(-1, 1)
                  for I in itertools.combinations(range(4), k)}
        a = constant_form(C4, k, coeffs)
        ss = hodge_star(g, hodge_star(g, a)).values_at(p)
        for I, c in coeffs.items():
            assert ss[I] == pytest.approx(STAR_STAR_SIGN[k] * c, abs=1e-12)


def test_volume_form_is_sqrt_det():
    def gfn(q):
        s = 1.0 + 0.1 * ad.sin(q[1])
        return [[-s, 0, 0, 0], [0, s, 0, 0], [0, 0, 2.0, 0], [0, 0, 0, 1.0]]

    g = MetricField(C4, gfn)
    p = (0.2, 0.5, 1.0, -1.0)
    vol = volume_form(g).values_at(p)[(0, 1, 2, 3)]
    s = 1.0 + 0.1 * math.sin(0.5)
    assert vol == pytest.approx(math.sqrt(s * s * 2.0))


def test_singular_metric_raises():
    g = MetricField(C4, lambda q: [[0.0] * 4 for _ in range(4)])
    a = coordinate_differential(C4, 0)
    with pytest.raises(SingularMetricError):
        hodge_star(g, a).values_at((0.0, 0.0, 0.0, 0.0))


def test_inverse4_matches_numpy():
    rng = np.random.default_rng(3)
    m = rng.uniform(-1, 1, (4, 4)) + 4.0 * np.eye(4)
    inv = np.array(inverse4([list(row) for row in m]))
    assert np.allclose(inv, np.linalg.inv(m), atol=1e-12)


def test_pullback_metric_is_congruence():
    fwd = ChartMap(C2, C4, lambda p: (p[0], p[1], p[0] * p[1], p[0] - p[1]))
    g = minkowski_metric(C4)
    gp = pullback_metric(fwd, g)
    p = (0.6, -0.2)
    J = np.array(fwd.jacobian_at(p))
    G = np.diag([-1.0, 1.0, 1.0, 1.0])
    expected = J.T @ G @ J
    assert np.allclose(np.array(gp.values_at(p)), expected, atol=1e-12)


def test_zero_form_and_scale():
    z = zero_form(C4, 2)
    p = (1.0, 2.0, 3.0, 4.0)
    assert all(v == 0.0 for v in z.values_at(p).values())
    a = constant_form(C4, 1, {(1,): 2.0})
    scaled = a.scale(lambda q: q[0])
    assert scaled.values_at(p)[(1,)] == pytest.approx(2.0)
