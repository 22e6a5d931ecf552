"""Kerr-Schild charts, derived scalars, the null field, metric and lcs form.

Conventions: radians throughout; theta in (0, pi); phi unwrapped on the
covering chart; u = t + r (ingoing); the positive-r sheet is returned by the
inverse chart.  The excluded set is the ring z = 0, x^2 + y^2 = a^2.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

from . import ad
from .ad import value_of
from .errors import (ConfigurationError, DomainError, LeeSingularityError,
                     SingularLocusError)
from .forms import (Chart, ChartMap, FormField, MetricField,
                    coordinate_differential, ext_d, form_from_components,
                    minkowski_metric, pullback_metric, wedge)

CARTESIAN = Chart("cartesian", ("t", "x", "y", "z"))
KS = Chart("ks", ("t", "r", "theta", "phi"))
KSU = Chart("ksu", ("t", "u", "theta", "phi"))

RING_MARGIN = 1e-10
Z_MARGIN = 1e-12
SIGMA_MIN = 1e-8
T_MARGIN = 1e-12


@dataclass(frozen=True)
class KerrParams:
    """Rotation parameter a > 0; mass is fixed to 1 (Planck units)."""

    a: float
    m: float = 1.0

    def __post_init__(self):
        if not self.a > 0:
            raise ConfigurationError(f"need a > 0, got {self.a}")
        if self.m != 1.0:
            raise ConfigurationError("mass is fixed to 1")


@dataclass(frozen=True)
class KSPoint:
    t: float
    r: float
    theta: float
    phi: float

    def __post_init__(self):
        if self.r == 0.0:
            raise SingularLocusError("r = 0 is outside the chart")
        if not 0.0 < self.theta < math.pi:
            raise SingularLocusError(f"theta must lie in (0, pi), got {self.theta}")

    @property
    def u(self):
        return self.t + self.r

    def as_tuple(self):
        return (self.t, self.r, self.theta, self.phi)


@dataclass(frozen=True)
class CartesianEvent:
    t: float
    x: float
    y: float
    z: float

    def as_tuple(self):
        return (self.t, self.x, self.y, self.z)

    def rho2(self):
        return self.x * self.x + self.y * self.y

    def on_ring(self, a, margin=RING_MARGIN):
        return abs(self.z) < margin and abs(self.rho2() - a * a) < margin


@dataclass(frozen=True)
class DerivedScalars:
    """Scalars attached to a chart point; oblateness/kappa need z != 0."""

    s: float
    oblateness: Optional[float]
    kappa: Optional[float]
    nu: float
    u: float
    theta_cap: float          # a * t * sin^2(theta)
    f: float                  # metric prefactor 2 r^3 / (r^4 + a^2 z^2)


# -- J maps (half sum / half difference of x and 1/x) ------------------------

def j_plus(x):
    if value_of(x) == 0.0:
        raise DomainError("j_plus", 0.0)
    return 0.5 * (x + 1.0 / x)


def j_minus(x):
    if value_of(x) == 0.0:
        raise DomainError("j_minus", 0.0)
    return 0.5 * (x - 1.0 / x)


def j_minus_inv(x):
    """The positive branch x + sqrt(x^2 + 1); j_minus(j_minus_inv(x)) = x."""
    return x + ad.sqrt(x * x + 1.0)


# -- forward chart -----------------------------------------------------------

def ks_to_cartesian_tuple(p, params):
    """AD-evaluable chart map (t, r, theta, phi) -> (t, x, y, z)."""
    t, r, theta, phi = p
    a = params.a
    st = ad.sin(theta)
    cp = ad.cos(phi)
    sp = ad.sin(phi)
    # x + iy = (r - ia) sin(theta) e^{i phi}
    x = st * (r * cp + a * sp)
    y = st * (r * sp - a * cp)
    z = r * ad.cos(theta)
    return (t, x, y, z)


def ks_to_cartesian(p, params):
    t, x, y, z = ks_to_cartesian_tuple(p.as_tuple(), params)
    return CartesianEvent(t, x, y, z)


def radius_from_cartesian(x, y, z, a):
    """Positive root of r^4 - (|x|^2 - a^2) r^2 - a^2 z^2 = 0 (AD-evaluable)."""
    w = x * x + y * y + z * z - a * a
    r2 = 0.5 * (w + ad.sqrt(w * w + 4.0 * a * a * z * z))
    return ad.sqrt(r2)


def cartesian_to_ks(e, params):
    """Closed-form inverse chart on the positive-r sheet.

    Primary path recovers r from the oblateness invariant via the positive
    branch of the half-difference map; the z = 0 plane outside the ring is
    resolved by the quartic root.
    """
    a = params.a
    if e.on_ring(a):
        raise SingularLocusError("point on the singular ring")
    if abs(e.z) < Z_MARGIN:
        if e.rho2() <= a * a:
            raise SingularLocusError(
                "z = 0 inside the disk is the r = 0 locus (excluded)"
            )
        r = radius_from_cartesian(e.x, e.y, e.z, a)
        theta = 0.5 * math.pi
    else:
        s = 1.0 if e.z > 0 else -1.0
        o = oblateness(e, a)
        q = j_minus_inv(s * o)
        r = math.sqrt(a * abs(e.z) * q)
        theta = math.acos(e.z / r)
    st = math.sin(theta)
    # phi from x + iy = (r - ia) sin(theta) e^{i phi}
    w = complex(e.x, e.y) / (complex(r, -a) * st)
    phi = math.atan2(w.imag, w.real)
    return KSPoint(e.t, r, theta, phi)


def oblateness(e, a):
    """(|x|^2 - a^2) / (2 a z), dimensionless; needs z != 0."""
    if e.z == 0.0:
        raise DomainError("oblateness", 0.0)
    x2 = e.x * e.x + e.y * e.y + e.z * e.z
    return (x2 - a * a) / (2.0 * a * e.z)


def derived_scalars(p, params):
    """All derived scalar fields at a chart point."""
    a = params.a
    t, r, theta, phi = p.as_tuple()
    ct = math.cos(theta)
    st = math.sin(theta)
    z = r * ct
    sigma = r * r + a * a * ct * ct
    if sigma < SIGMA_MIN:
        raise SingularLocusError(f"Sigma = {sigma} below margin")
    nu = -a * ct / sigma
    f = 2.0 * r ** 3 / (r ** 4 + a * a * z * z)
    if abs(z) < Z_MARGIN:
        o = None
        kappa = None
        s = 0.0
    else:
        s = 1.0 if z > 0 else -1.0
        e = ks_to_cartesian(p, params)
        o = oblateness(e, a)
        kappa = ad.arcsinh(s * o)
    return DerivedScalars(s=s, oblateness=o, kappa=kappa, nu=nu,
                          u=t + r, theta_cap=a * t * st * st, f=f)


# -- the null one-form and vector field --------------------------------------

def lambda_form(params, chart=KS):
    """lambda = du + a sin^2(theta) dphi; du = dt + dr on the (t,r) chart."""
    a = params.a

    def sin2coeff(p):
        st = ad.sin(p[2])
        return a * st * st

    if chart == KS:
        return form_from_components(chart, 1, {
            (0,): lambda p: 1.0,
            (1,): lambda p: 1.0,
            (3,): sin2coeff,
        })
    if chart == KSU:
        return form_from_components(chart, 1, {
            (1,): lambda p: 1.0,
            (3,): sin2coeff,
        })
    raise ConfigurationError(f"lambda_form not defined on chart {chart.name}")


def lambda_covector_components(point, a):
    """Components of lambda_i dx_i on the Cartesian chart (AD-evaluable)."""
    t, x, y, z = point
    r = radius_from_cartesian(x, y, z, a)
    den = r * r + a * a
    return (1.0,
            (r * x + a * y) / den,
            (r * y - a * x) / den,
            z / r)


def lambda_vec(e, params):
    """The null vector field: the covector with its index raised by eta."""
    lam = lambda_covector_components(e.as_tuple(), params.a)
    return (-value_of(lam[0]),) + tuple(value_of(c) for c in lam[1:])


def minkowski_norm2_vec(v):
    return -v[0] * v[0] + v[1] * v[1] + v[2] * v[2] + v[3] * v[3]


# -- the Kerr metric ---------------------------------------------------------

def kerr_metric(params, chart=CARTESIAN):
    """eta + f lambda (x) lambda on Cartesian coordinates, or its pullback."""
    a = params.a

    def fn(p):
        t, x, y, z = p
        r = radius_from_cartesian(x, y, z, a)
        lam = lambda_covector_components(p, a)
        f = 2.0 * r ** 3 / (r ** 4 + a * a * z * z)
        g = [[0.0] * 4 for _ in range(4)]
        for i in range(4):
            eta_ii = -1.0 if i == 0 else 1.0
            for j in range(i, 4):
                v = f * lam[i] * lam[j]
                if i == j:
                    v = v + eta_ii
                g[i][j] = v
                g[j][i] = v
        return g

    cart = MetricField(CARTESIAN, fn)
    if chart == CARTESIAN:
        return cart
    if chart == KS:
        return pullback_metric(ks_chart_map(params), cart)
    raise ConfigurationError(f"kerr_metric not defined on chart {chart.name}")


def ks_chart_map(params):
    """ChartMap from the (t, r, theta, phi) chart to Cartesian coordinates."""
    return ChartMap(
        KS, CARTESIAN,
        fn=lambda p: ks_to_cartesian_tuple(p, params),
        inverse=lambda p: cartesian_to_ks(
            CartesianEvent(*[value_of(c) for c in p]), params).as_tuple(),
    )


def ksu_to_ks_map():
    """(t, u, theta, phi) -> (t, r, theta, phi) with r = u - t."""
    return ChartMap(
        KSU, KS,
        fn=lambda p: (p[0], p[1] - p[0], p[2], p[3]),
        inverse=lambda p: (p[0], p[0] + p[1], p[2], p[3]),
    )


# -- lcs structure -----------------------------------------------------------

def lee_form(chart):
    """The Lee form; internally -dt/t (the sign that makes the lcs law hold).

    The source text writes the Lee form as +dt/t; the measured sign is logged
    by the verification suite rather than silently adopted.
    """
    dt = coordinate_differential(chart, 0)
    return dt.scale(lambda p: -_inv_t(p))


def omega_kerr(params, chart=KSU):
    """omega = t^{-1} d(t lambda): the lcs two-form on the covering chart."""
    lam = lambda_form(params, chart)
    tlam = lam.scale(lambda p: p[0])
    d_tlam = ext_d(tlam)
    return d_tlam.scale(lambda p: _inv_t(p))


def omega_kerr_via_lee(params, chart=KSU):
    """The equivalent construction d(lambda) + lambda ^ lee."""
    lam = lambda_form(params, chart)
    return ext_d(lam) + wedge(lam, lee_form(chart))


def _inv_t(p):
    if abs(value_of(p[0])) < T_MARGIN:
        raise LeeSingularityError("|t| below margin: Lee form undefined")
    return 1.0 / p[0]


def contact_coefficient_form(params):
    """lambda ^ d(lambda) on the (t, u, theta, phi) chart (3-form)."""
    lam = lambda_form(params, KSU)
    return wedge(lam, ext_d(lam))


def contact_check(params, slice_t, thetas=None, margin=1e-3):
    """Sample lambda ^ d(lambda) on a t = const slice.

    Returns (min |coefficient|, max residual against a*sin(2 theta)) over the
    sampled thetas, which stay away from {0, pi/2, pi} by the margin.
    """
    a = params.a
    if thetas is None:
        n = 100
        thetas = [margin + (math.pi - 2 * margin) * i / (n - 1) for i in range(n)]
        thetas = [th for th in thetas if abs(th - 0.5 * math.pi) > margin]
    form = contact_coefficient_form(params)
    min_abs = math.inf
    max_res = 0.0
    for th in thetas:
        c = form.values_at((slice_t, 0.3, th, 0.7))[(1, 2, 3)]
        min_abs = min(min_abs, abs(c))
        max_res = max(max_res, abs(c - a * math.sin(2.0 * th)))
    return min_abs, max_res


# -- divergence and curvature ------------------------------------------------

def flat_divergence(params, e):
    """Flat divergence of the null field by AD through the inverse chart."""
    a = params.a
    xs = ad.make_vars([e.x, e.y, e.z])
    lam = lambda_covector_components((e.t, xs[0], xs[1], xs[2]), a)
    div = 0.0
    for i in range(3):
        div += ad.partials_of(lam[i + 1], 3)[i]
    return value_of(div)


def flat_divergence_closed_form(params, e):
    """2 r / (r^2 + a^2 cos^2 theta) with cos(theta) = z / r."""
    a = params.a
    r = value_of(radius_from_cartesian(e.x, e.y, e.z, a))
    sigma = r * r + a * a * e.z * e.z / (r * r)
    return 2.0 * r / sigma


def flat_divergence_paper_alt(params, e):
    """The printed alternative -2 s (1 + o^2)^{-1/2} exp(kappa); report-only."""
    a = params.a
    s = 1.0 if e.z > 0 else -1.0
    o = oblateness(e, a)
    kappa = math.asinh(s * o)
    return -2.0 * s * math.exp(kappa) / math.sqrt(1.0 + o * o)


def ricci_residual(params, e):
    """max |Ricci_ij| of the Kerr metric at a Cartesian event, via nested AD.

    The metric is static, so only the three spatial coordinates are active;
    time derivatives vanish identically.
    """
    a = params.a
    r = value_of(radius_from_cartesian(e.x, e.y, e.z, a))
    sigma = r * r + a * a * e.z * e.z / (r * r)
    if sigma < 1e-6:
        raise SingularLocusError(f"Sigma = {sigma}: too close to the ring")

    metric = kerr_metric(params, CARTESIAN)
    inner = ad.make_vars([e.x, e.y, e.z])
    outer = [ad.Scalar(inner[i], tuple(1.0 if j == i else 0.0 for j in range(3)))
             for i in range(3)]
    G2 = metric.fn((e.t, outer[0], outer[1], outer[2]))

    def spatial_partials(v):
        # partials over (t, x, y, z): time slot is zero
        return (0.0,) + ad.partials_of(v, 3)

    gval = [[G2[i][j].val if isinstance(G2[i][j], ad.Scalar) else G2[i][j]
             for j in range(4)] for i in range(4)]
    dg = [[spatial_partials(G2[i][j]) for j in range(4)] for i in range(4)]

    from .forms import inverse4
    ginv = inverse4(gval)

    gamma = [[[0.0] * 4 for _ in range(4)] for _ in range(4)]
    for k in range(4):
        for i in range(4):
            for j in range(i, 4):
                tot = 0.0
                for l in range(4):
                    tot = tot + ginv[k][l] * (dg[l][j][i] + dg[i][l][j] - dg[i][j][l])
                tot = 0.5 * tot
                gamma[k][i][j] = tot
                gamma[k][j][i] = tot

    def dgamma(k, i, j, m):
        # d Gamma^k_ij / dx^m ; zero for m = 0 (static metric)
        if m == 0:
            return 0.0
        v = gamma[k][i][j]
        return ad.partials_of(v, 3)[m - 1] if isinstance(v, ad.Scalar) else 0.0

    worst = 0.0
    for i in range(4):
        for j in range(i, 4):
            ric = 0.0
            for k in range(4):
                ric = ric + dgamma(k, i, j, k) - dgamma(k, i, k, j)
                for l in range(4):
                    ric = ric + (gamma[k][k][l] * gamma[l][i][j]
                                 - gamma[k][j][l] * gamma[l][i][k])
            worst = max(worst, abs(value_of(ric)))
    return worst


def minkowski_cartesian():
    return minkowski_metric(CARTESIAN)
