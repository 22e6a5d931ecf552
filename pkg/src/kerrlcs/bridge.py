"""The coordinate substitution identifying the Kerr chart with the Euler
chart, the pullback identities for the null form and the lcs form, the
characteristic polynomial of the substitution matrix, and torus covers.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

import numpy as np

from .errors import ChartError, ConfigurationError, NotATorusMapError
from .forms import ChartMap, ext_d, pullback, wedge
from .kerr import KSU, lambda_form, omega_kerr, KerrParams
from .unitary import EULER4, alpha_form_u2, omega_u2

TWO_PI = 2.0 * math.pi


@dataclass(frozen=True)
class ReparamMatrix:
    """The 3x3 substitution matrix acting on the (u, theta, phi) column."""

    a: float

    def matrix(self):
        a = self.a
        return np.array([[1.0, 0.0, a / 2.0],
                         [0.0, 2.0, 0.0],
                         [0.0, 0.0, -a / 2.0]])

    def det(self):
        return -self.a

    def is_integral(self):
        return self.a == 2.0 * round(self.a / 2.0)


@dataclass(frozen=True)
class CoverMap:
    """Integer 3x3 matrix acting on the 3-torus with period 2 pi."""

    matrix: tuple

    def __post_init__(self):
        m = np.asarray(self.matrix, dtype=float)
        if m.shape != (3, 3) or not np.all(m == np.round(m)):
            raise NotATorusMapError("matrix must be 3x3 integral")

    def as_array(self):
        return np.asarray(self.matrix, dtype=int)

    def degree(self):
        return abs(round(float(np.linalg.det(self.as_array()))))


COVER_2 = CoverMap(((1, 0, 1), (0, 2, 0), (0, 0, -1)))
COVER_IDENTITY = CoverMap(((1, 0, 0), (0, 1, 0), (0, 0, 1)))
COVER_DIAG2 = CoverMap(((2, 0, 0), (0, 2, 0), (0, 0, 2)))


def substitution_map(a):
    """ChartMap (t, u, theta, phi) -> (t, alpha, beta, gamma).

    (alpha, beta, gamma) = (u + (a/2) phi, 2 theta, -(a/2) phi); linear,
    hence its own Jacobian, with an exact inverse.
    """
    if a == 0.0:
        raise ConfigurationError("a = 0 degenerates the substitution")

    def fwd(p):
        t, u, theta, phi = p
        return (t, u + 0.5 * a * phi, 2.0 * theta, -0.5 * a * phi)

    def inv(p):
        t, alpha, beta, gamma = p
        phi = -2.0 * gamma / a
        return (t, alpha + gamma, 0.5 * beta, phi)

    return ChartMap(KSU, EULER4, fn=fwd, inverse=inv)


def verify_lambda_identity(a, points):
    """max |lambda - pullback(alpha)| over sample points on the cover chart."""
    sub = substitution_map(a)
    lam = lambda_form(KerrParams(a), KSU)
    pb = pullback(sub, alpha_form_u2())
    worst = 0.0
    for p in points:
        lv = lam.values_at(p)
        pv = pb.values_at(p)
        worst = max(worst, max(abs(lv[I] - pv[I]) for I in lv))
    return worst


def verify_omega_identity(a, points):
    """max componentwise |omega_Kerr - pullback(omega_U2)| over sample points."""
    sub = substitution_map(a)
    om_k = omega_kerr(KerrParams(a), KSU)
    pb = pullback(sub, omega_u2())
    worst = 0.0
    for p in points:
        kv = om_k.values_at(p)
        pv = pb.values_at(p)
        worst = max(worst, max(abs(kv[I] - pv[I]) for I in kv))
    return worst


def substitution_naturality_residual(a, points):
    """max |pullback(d alpha) - d(pullback alpha)|: the proof's linearity step."""
    sub = substitution_map(a)
    alpha = alpha_form_u2()
    lhs = pullback(sub, ext_d(alpha))
    rhs = ext_d(pullback(sub, alpha))
    worst = 0.0
    for p in points:
        lv = lhs.values_at(p)
        rv = rhs.values_at(p)
        worst = max(worst, max(abs(lv[I] - rv[I]) for I in lv))
    return worst


def char_poly_a(a):
    """Coefficients of 2 det(T I - [a]) vs the printed cubic.

    Returns (computed, printed, per-coefficient absolute differences), highest
    degree first.  The printed constant term is known to disagree by a factor
    of 2; callers report, never assert.
    """
    m = ReparamMatrix(a).matrix()
    computed = 2.0 * np.poly(m)               # 2 * monic charpoly
    printed = np.array([2.0, a - 6.0, 4.0 - 3.0 * a, a])
    return computed, printed, np.abs(computed - printed)


def torus_cover_preimages(cover, target):
    """All solutions of M x = target modulo the 2 pi lattice.

    Enumerates lattice translates, maps them through M^{-1}, and deduplicates
    modulo 2 pi; returns exactly |det M| points, each verified by forward
    application.
    """
    m = cover.as_array()
    d = round(float(np.linalg.det(m)))
    if d == 0:
        raise NotATorusMapError("matrix is singular on the torus")
    adj = np.round(np.linalg.inv(m) * d).astype(int)   # integral adjugate
    y = np.asarray(target, dtype=float)
    bound = int(np.abs(m).sum(axis=1).max()) + 1
    seen = []
    for k in itertools.product(range(-bound, bound + 1), repeat=3):
        x = adj @ (y + TWO_PI * np.asarray(k)) / d
        x = np.mod(x, TWO_PI)
        if any(np.all(np.abs(_lattice_delta(x, s)) < 1e-9) for s in seen):
            continue
        seen.append(x)
    # forward verification
    for x in seen:
        res = _lattice_delta(m @ x, y)
        if np.max(np.abs(res)) > 1e-9:
            raise AssertionError("preimage failed forward verification")
    if len(seen) != abs(d):
        raise AssertionError(
            f"expected {abs(d)} preimages, found {len(seen)}"
        )
    return seen


def _lattice_delta(x, y):
    """Componentwise difference reduced to (-pi, pi]."""
    d = np.mod(np.asarray(x) - np.asarray(y) + math.pi, TWO_PI) - math.pi
    return d


def deck_difference(cover, target):
    """Difference of the two preimages of a degree-2 cover, mod the lattice."""
    pre = torus_cover_preimages(cover, target)
    if len(pre) != 2:
        raise ChartError("deck difference needs a degree-2 cover")
    return _lattice_delta(pre[0], pre[1])
