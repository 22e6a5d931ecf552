import math

import numpy as np
import pytest

from kerrlcs.errors import (ConfigurationError, LeeSingularityError,
                            SingularLocusError)
from kerrlcs.forms import ext_d, volume_form, wedge
from kerrlcs.kerr import (KS, KSU, CartesianEvent, KSPoint, KerrParams,
                          cartesian_to_ks, contact_coefficient_form,
                          derived_scalars, flat_divergence,
                          flat_divergence_closed_form, j_minus, j_minus_inv,
                          j_plus, kerr_metric, ks_to_cartesian, lambda_form,
                          lambda_vec, lee_form, minkowski_norm2_vec,
                          oblateness, omega_kerr, omega_kerr_via_lee,
                          ricci_residual)

A2 = KerrParams(2.0)


def test_params_validation():
    with pytest.raises(ConfigurationError):
        KerrParams(0.0)
    with pytest.raises(ConfigurationError):
        KerrParams(-1.0)
    with pytest.raises(ConfigurationError):
        KerrParams(1.0, m=2.0)


def test_forward_chart_known_point():
    # theta = pi/2, phi = 0: x = r, y = -a, z = 0
    e = ks_to_cartesian(KSPoint(0.0, 3.0, 0.5 * math.pi, 0.0), A2)
    assert e.x == pytest.approx(3.0)
    assert e.y == pytest.approx(-2.0)
    assert abs(e.z) < 1e-12


def test_roundtrip_both_z_signs():
    rng = np.random.default_rng(5)
    for _ in range(200):
        p = KSPoint(rng.uniform(-5, 5), rng.uniform(0.1, 10.0),
                    rng.uniform(1e-3, math.pi - 1e-3), rng.uniform(-9, 9))
        e = ks_to_cartesian(p, A2)
        q = cartesian_to_ks(e, A2)
        e2 = ks_to_cartesian(q, A2)
        assert max(abs(u - v) for u, v in zip(e.as_tuple(), e2.as_tuple())) < 1e-10


def test_inverse_rejects_ring_and_disk():
    # the ring x^2 + y^2 = a^2, z = 0
    with pytest.raises(SingularLocusError):
        cartesian_to_ks(CartesianEvent(0.0, 2.0, 0.0, 0.0), A2)
    # interior of the disk at z = 0
    with pytest.raises(SingularLocusError):
        cartesian_to_ks(CartesianEvent(0.0, 1.0, 0.0, 0.0), A2)


def test_equatorial_plane_outside_disk():
    e = ks_to_cartesian(KSPoint(0.0, 3.0, 0.5 * math.pi, 1.2), A2)
    q = cartesian_to_ks(CartesianEvent(e.t, e.x, e.y, 0.0), A2)
    assert q.theta == pytest.approx(0.5 * math.pi)
    assert q.r == pytest.approx(3.0, abs=1e-10)


def test_j_functions():
    assert j_plus(2.0) == pytest.approx(1.25)
    assert j_minus(2.0) == pytest.approx(0.75)
    for x in (-4.0, -0.3, 0.2, 7.0):
        assert j_minus(j_minus_inv(x)) == pytest.approx(x, abs=1e-13)
    # hyperbolic identity J+^2 - J-^2 = 1
    assert j_plus(3.7) ** 2 - j_minus(3.7) ** 2 == pytest.approx(1.0)


def test_derived_scalars_closed_forms():
    p = KSPoint(1.0, 1.0, math.pi / 3.0, 0.0)
    d = derived_scalars(p, A2)
    sigma = 1.0 + 4.0 * 0.25
    assert d.nu == pytest.approx(-2.0 * 0.5 / sigma)      # -a cos(theta)/Sigma
    assert d.f == pytest.approx(2.0 / (1.0 + 4.0 * 0.25))  # 2 r^3/(r^4+a^2 z^2)
    # kappa and oblateness linked by sinh
    assert math.sinh(d.kappa) == pytest.approx(d.s * d.oblateness)


def test_oblateness_scale_invariant():
    e = ks_to_cartesian(KSPoint(0.3, 2.0, 1.0, 0.7), A2)
    o1 = oblateness(e, 2.0)
    c = 5.0
    o2 = oblateness(CartesianEvent(c * e.t, c * e.x, c * e.y, c * e.z), c * 2.0)
    assert o1 == pytest.approx(o2, abs=1e-13)


def test_null_field():
    rng = np.random.default_rng(9)
    g = kerr_metric(A2)
    for _ in range(50):
        p = KSPoint(rng.uniform(0.1, 5), rng.uniform(0.2, 8),
                    rng.uniform(1e-2, math.pi - 1e-2), rng.uniform(-3, 3))
        e = ks_to_cartesian(p, A2)
        v = np.asarray(lambda_vec(e, A2))
        assert abs(minkowski_norm2_vec(v)) < 1e-12
        G = np.array(g.values_at(e.as_tuple()))
        assert abs(v @ G @ v) < 1e-11


def test_metric_signature_and_volume():
    p = (0.0, 2.0, math.pi / 3.0, 0.0)
    g = kerr_metric(KerrParams(1.0), KS)
    eig = np.sort(np.linalg.eigvalsh(np.array(g.values_at(p))))
    assert eig[0] < 0 and np.all(eig[1:] > 0)
    vol = volume_form(g).values_at(p)[(0, 1, 2, 3)]
    sigma = 4.0 + 0.25
    assert vol == pytest.approx(sigma * math.sin(math.pi / 3.0), rel=1e-12)


def test_divergence_matches_closed_form():
    e = ks_to_cartesian(KSPoint(0.5, 1.7, 0.9, 0.3), A2)
    assert flat_divergence(A2, e) == pytest.approx(
        flat_divergence_closed_form(A2, e), abs=1e-10)


def test_ricci_flat():
    e = CartesianEvent(0.0, 3.0, 1.0, 2.0)
    assert ricci_residual(A2, e) < 1e-6


def test_lambda_form_components():
    p = (1.0, 3.0, 0.5 * math.pi, 0.2)
    lam = lambda_form(A2, KS).values_at(p)
    assert lam[(0,)] == 1.0 and lam[(1,)] == 1.0
    assert lam[(2,)] == 0.0
    assert lam[(3,)] == pytest.approx(2.0)  # a sin^2(pi/2)


def test_contact_coefficient():
    par = KerrParams(1.5)
    form = contact_coefficient_form(par)
    p = (1.0, 2.0, 0.7, 0.1)
    c = form.values_at(p)[(1, 2, 3)]
    assert c == pytest.approx(1.5 * math.sin(1.4), abs=1e-12)
    eq = (1.0, 2.0, 0.5 * math.pi, 0.1)
    assert abs(form.values_at(eq)[(1, 2, 3)]) < 1e-12


def test_omega_constructions_agree_and_satisfy_lcs_law():
    p = (1.3, 2.6, 0.8, -0.4)
    om = omega_kerr(A2, KSU)
    alt = omega_kerr_via_lee(A2, KSU)
    ov, av = om.values_at(p), alt.values_at(p)
    for I in ov:
        assert ov[I] == pytest.approx(av[I], abs=1e-12)
    lhs = ext_d(om) - wedge(om, lee_form(KSU))
    assert max(abs(v) for v in lhs.values_at(p).values()) < 1e-12


def test_lee_form_singular_at_t_zero():
    with pytest.raises(LeeSingularityError):
        lee_form(KSU).values_at((0.0, 1.0, 0.7, 0.1))
