"""Quaternions, SU(2) Euler angles, Maurer-Cartan frame, Cayley transform,
and the lcs two-form on the abelian cover of U(2).

Angle convention: plain radian exponentials, exp(theta * unit) acting by
quaternion multiplication.  The closed-form frame is stated with its own
normalization; the pinned reconciliation against the group-theoretic frame
is (i, j, k) components <-> (alpha, gamma, beta) forms with coefficient
arguments (2a, 2b + pi/2, 2c).
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from . import ad
from .ad import Scalar, value_of, partials_of, lift_vars
from .errors import AtInfinityError, ConfigurationError
from .forms import (Chart, FormField, coordinate_differential, ext_d,
                    form_from_components, wedge)

EULER3 = Chart("euler3", ("alpha", "beta", "gamma"))
EULER4 = Chart("euler", ("t", "alpha", "beta", "gamma"))

GIMBAL_MARGIN = 1e-6


@dataclass(frozen=True)
class Quaternion:
    """Quaternion w + x i + y j + z k with AD-capable components."""

    w: object
    x: object
    y: object
    z: object

    def __add__(self, q):
        return Quaternion(self.w + q.w, self.x + q.x, self.y + q.y, self.z + q.z)

    def __sub__(self, q):
        return Quaternion(self.w - q.w, self.x - q.x, self.y - q.y, self.z - q.z)

    def __mul__(self, q):
        if not isinstance(q, Quaternion):
            return Quaternion(self.w * q, self.x * q, self.y * q, self.z * q)
        return Quaternion(
            self.w * q.w - self.x * q.x - self.y * q.y - self.z * q.z,
            self.w * q.x + self.x * q.w + self.y * q.z - self.z * q.y,
            self.w * q.y + self.y * q.w + self.z * q.x - self.x * q.z,
            self.w * q.z + self.z * q.w + self.x * q.y - self.y * q.x,
        )

    def __rmul__(self, c):
        return Quaternion(c * self.w, c * self.x, c * self.y, c * self.z)

    def conj(self):
        return Quaternion(self.w, -self.x, -self.y, -self.z)

    def norm2(self):
        return self.w * self.w + self.x * self.x + self.y * self.y + self.z * self.z

    def values(self):
        return (value_of(self.w), value_of(self.x),
                value_of(self.y), value_of(self.z))


def quat_exp_axis(axis, theta):
    """exp(theta * unit) for unit in {i, j, k}: cos(theta) + sin(theta)*unit."""
    c, s = ad.cos(theta), ad.sin(theta)
    comps = {"i": (c, s, 0.0, 0.0), "j": (c, 0.0, s, 0.0), "k": (c, 0.0, 0.0, s)}
    return Quaternion(*comps[axis])


def euler_to_su2(alpha, beta, gamma):
    """exp(gamma k) * exp(beta j) * exp(alpha i) as a unit quaternion."""
    return (quat_exp_axis("k", gamma)
            * quat_exp_axis("j", beta)
            * quat_exp_axis("i", alpha))


def su2_from_quaternion(q):
    """2x2 complex matrix [[w+ix, y+iz], [-y+iz, w-ix]] (u, v block pattern)."""
    w, x, y, z = q.values()
    return np.array([[complex(w, x), complex(y, z)],
                     [complex(-y, z), complex(w, -x)]])


def quaternion_from_su2(m):
    u, v = m[0, 0], m[0, 1]
    return Quaternion(u.real, u.imag, v.real, v.imag)


def su2_to_euler(q):
    """Euler angles reproducing a unit quaternion (away from the gimbal locus).

    Uses w + iz = e^{ic}(cos a cos b - i sin a sin b) and
    x + iy = e^{ic}(sin a cos b + i cos a sin b); the sign of cos 2b is
    resolved by checking which candidate reproduces q.
    """
    w, x, y, z = q.values()
    u = complex(w, z)
    v = complex(x, y)
    uvbar = u * v.conjugate()
    sin2b = -2.0 * uvbar.imag
    cos2b_mag = math.hypot(abs(u) ** 2 - abs(v) ** 2, 2.0 * uvbar.real)
    if cos2b_mag < GIMBAL_MARGIN:
        raise ConfigurationError("gimbal locus: Euler angles are degenerate")
    for sign in (1.0, -1.0):
        cos2b = sign * cos2b_mag
        b = 0.5 * math.atan2(sin2b, cos2b)
        a = 0.5 * math.atan2(2.0 * uvbar.real / cos2b,
                             (abs(u) ** 2 - abs(v) ** 2) / cos2b)
        p = complex(math.cos(a) * math.cos(b), -math.sin(a) * math.sin(b))
        if abs(p) < 1e-12:
            continue
        c = cmath.phase(u / p)
        cand = euler_to_su2(a, b, c)
        err = max(abs(cv - qv) for cv, qv in zip(cand.values(), q.values()))
        if err < 1e-9:
            return a, b, c
    raise ConfigurationError("no Euler decomposition found within tolerance")


# -- Maurer-Cartan frame -----------------------------------------------------

def mc_frame_closed_form():
    """The stated closed-form frame on the (alpha, beta, gamma) chart."""
    alpha_form = form_from_components(EULER3, 1, {
        (0,): lambda p: 1.0,
        (2,): lambda p: ad.cos(p[1]),
    })
    beta_form = form_from_components(EULER3, 1, {
        (1,): lambda p: -ad.sin(p[0]),
        (2,): lambda p: ad.cos(p[0]) * ad.sin(p[1]),
    })
    gamma_form = form_from_components(EULER3, 1, {
        (1,): lambda p: ad.cos(p[0]),
        (2,): lambda p: ad.sin(p[0]) * ad.sin(p[1]),
    })
    return MaurerCartanFrame(alpha_form, beta_form, gamma_form)


@dataclass(frozen=True)
class MaurerCartanFrame:
    alpha_form: FormField
    beta_form: FormField
    gamma_form: FormField

    def as_tuple(self):
        return (self.alpha_form, self.beta_form, self.gamma_form)


def mc_frame_from_group():
    """The frame g^{-1} dg computed by AD through euler_to_su2.

    Returns (theta_i, theta_j, theta_k): the (i, j, k) components of the
    quaternion-valued tautological one-form, as forms on the Euler chart.
    """
    def component_fns(comp_index):
        def cf(p):
            xs = lift_vars(p)
            q = euler_to_su2(xs[0], xs[1], xs[2])
            qinv = Quaternion(_val(q.w), -_val(q.x), -_val(q.y), -_val(q.z))
            out = {}
            for j in range(3):
                dq = Quaternion(*(partials_of(c, 3)[j]
                                  for c in (q.w, q.x, q.y, q.z)))
                theta = qinv * dq
                out[(j,)] = (theta.x, theta.y, theta.z)[comp_index]
            return out
        return cf

    return tuple(FormField(EULER3, 1, component_fns(c)) for c in range(3))


def _val(x):
    return x.val if isinstance(x, Scalar) else x


def mc_flatness_residuals(point):
    """Residuals of d(theta) + 2 theta ^ theta = 0 for the group frame.

    For a quaternion-valued one-form theta = ti i + tj j + tk k the
    Maurer-Cartan equation reads componentwise
    d(ti) + 2 tj ^ tk = 0 (and cyclic).
    """
    ti, tj, tk = mc_frame_from_group()
    residuals = []
    for da, b, c in ((ti, tj, tk), (tj, tk, ti), (tk, ti, tj)):
        lhs = ext_d(da) + wedge(b, c).scale(2.0)
        residuals.extend(abs(v) for v in lhs.values_at(point).values())
    return max(residuals)


def structure_equation_residual(point, sign=1.0):
    """max residual of d(alpha) = sign * beta ^ gamma (and cyclic) at a point."""
    fa, fb, fc = mc_frame_closed_form().as_tuple()
    worst = 0.0
    for da, b, c in ((fa, fb, fc), (fb, fc, fa), (fc, fa, fb)):
        lhs = ext_d(da) - wedge(b, c).scale(sign)
        worst = max(worst, max(abs(v) for v in lhs.values_at(point).values()))
    return worst


# Pinned reconciliation between the group frame and the closed-form frame:
# theta_i/j/k match the alpha/gamma/beta closed forms with coefficient
# arguments remapped as below (signs +1, scale 1).
def _reconciliation_args(p):
    return (2.0 * p[0], 2.0 * p[1] + 0.5 * math.pi, 2.0 * p[2])


def mc_reconciliation_residual(point):
    """Residual of the pinned group-frame vs closed-form-frame identification."""
    ti, tj, tk = mc_frame_from_group()
    frame = mc_frame_closed_form()
    pairs = ((ti, frame.alpha_form), (tj, frame.gamma_form), (tk, frame.beta_form))
    mapped = _reconciliation_args(point)
    worst = 0.0
    for group_form, closed in pairs:
        gv = group_form.values_at(point)
        cv = closed.values_at(mapped)
        worst = max(worst, max(abs(gv[I] - cv[I]) for I in gv))
    return worst


# -- U(2), events and the Cayley transform -----------------------------------

@dataclass(frozen=True)
class UnitaryPoint:
    """Point of the abelian cover R x SU(2); projects to U(2)."""

    t_lift: float
    su2: Quaternion

    def to_u2(self):
        return cmath.exp(0.5j * self.t_lift) * su2_from_quaternion(self.su2)

    def det(self):
        return complex(np.linalg.det(self.to_u2()))


def hermitian_from_event(e):
    """[[t+z, x+iy], [x-iy, t-z]]: trace 2t, det = Minkowski interval."""
    t, x, y, z = e.as_tuple() if hasattr(e, "as_tuple") else e
    return np.array([[complex(t + z, 0.0), complex(x, y)],
                     [complex(x, -y), complex(t - z, 0.0)]])


def cayley(X):
    """(X - i)(X + i)^{-1}: Hermitian matrices to unitaries."""
    I = np.eye(2)
    return (X - 1j * I) @ np.linalg.inv(X + 1j * I)


def cayley_inv(U):
    """i (I + U)(I - U)^{-1}; undefined when U has eigenvalue 1."""
    I = np.eye(2)
    eig = np.linalg.eigvals(U)
    if min(abs(ev - 1.0) for ev in eig) < 1e-10:
        raise AtInfinityError("unitary has eigenvalue 1: preimage at infinity")
    return 1j * (I + U) @ np.linalg.inv(I - U)


# -- lcs structure on the abelian cover --------------------------------------

def alpha_form_u2():
    """The alpha frame form on the four-dimensional (t, alpha, beta, gamma) chart."""
    return form_from_components(EULER4, 1, {
        (1,): lambda p: 1.0,
        (3,): lambda p: ad.cos(p[2]),
    })


def frame_u2():
    """(alpha, beta, gamma) frame forms extended to the 4-coordinate chart."""
    alpha = alpha_form_u2()
    beta = form_from_components(EULER4, 1, {
        (2,): lambda p: -ad.sin(p[1]),
        (3,): lambda p: ad.cos(p[1]) * ad.sin(p[2]),
    })
    gamma = form_from_components(EULER4, 1, {
        (2,): lambda p: ad.cos(p[1]),
        (3,): lambda p: ad.sin(p[1]) * ad.sin(p[2]),
    })
    return alpha, beta, gamma


def lee_form_u2():
    """The lifted Lee form on the cover; same internal sign as the Kerr side."""
    from .kerr import lee_form
    return lee_form(EULER4)


def omega_u2():
    """omega = d(alpha) + alpha ^ lee: the lcs two-form on the cover."""
    alpha = alpha_form_u2()
    return ext_d(alpha) + wedge(alpha, lee_form_u2())
