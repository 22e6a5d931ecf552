"""Pointwise exterior calculus on coordinate charts of dimension up to 4.

A form is a field of coefficients over strictly increasing index tuples; the
coefficients of every stored or derived form are evaluated in one pass at a
point whose entries may be AD scalars, so exterior derivatives, pullbacks and
Hodge stars compose and nest freely.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Callable, Optional

from . import ad
from .ad import Scalar, value_of, partials_of, lift_vars
from .errors import ChartError, DegreeError, SingularMetricError


@dataclass(frozen=True)
class Chart:
    name: str
    coords: tuple

    @property
    def dim(self):
        return len(self.coords)


def increasing_tuples(dim, k):
    return list(itertools.combinations(range(dim), k))


def perm_sign(seq):
    """Sign of the permutation sorting seq; 0 if it has repeats."""
    seq = list(seq)
    sign = 1
    for i in range(len(seq)):
        for j in range(i + 1, len(seq)):
            if seq[i] == seq[j]:
                return 0
            if seq[i] > seq[j]:
                sign = -sign
    return sign


@dataclass(frozen=True)
class FormField:
    """Degree-k differential form as a coefficient-field over a chart.

    coeff_fn maps a chart point (tuple of floats or AD scalars) to a dict
    from increasing index tuples to coefficients; missing keys are zero.
    """

    chart: Chart
    degree: int
    coeff_fn: Callable

    def coeffs_at(self, point):
        """All C(dim, degree) coefficients at a point, zero-filled."""
        raw = self.coeff_fn(tuple(point))
        return {I: raw.get(I, 0.0) for I in increasing_tuples(self.chart.dim, self.degree)}

    def values_at(self, point):
        """Coefficients at a point as plain floats."""
        return {I: value_of(v) for I, v in self.coeffs_at(point).items()}

    def __add__(self, other):
        _check_same(self, other)
        a_fn, b_fn = self.coeff_fn, other.coeff_fn

        def cf(p):
            out = dict(a_fn(p))
            for I, v in b_fn(p).items():
                out[I] = out.get(I, 0.0) + v
            return out

        return FormField(self.chart, self.degree, cf)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        a_fn = self.coeff_fn
        return FormField(self.chart, self.degree,
                         lambda p: {I: -v for I, v in a_fn(p).items()})

    def scale(self, factor):
        """Multiply by a constant or by a scalar function of the point."""
        a_fn = self.coeff_fn
        if callable(factor):
            def cf(p):
                s = factor(p)
                return {I: s * v for I, v in a_fn(p).items()}
        else:
            def cf(p):
                return {I: factor * v for I, v in a_fn(p).items()}
        return FormField(self.chart, self.degree, cf)


def _check_same(a, b):
    if a.chart != b.chart:
        raise ChartError(f"chart mismatch: {a.chart.name} vs {b.chart.name}")
    if a.degree != b.degree:
        raise DegreeError(f"degree mismatch: {a.degree} vs {b.degree}")


def zero_form(chart, degree):
    return FormField(chart, degree, lambda p: {})


def constant_form(chart, degree, coeffs):
    fixed = dict(coeffs)
    return FormField(chart, degree, lambda p: dict(fixed))


def function_form(chart, fn):
    """Degree-0 form from a scalar function of the point."""
    return FormField(chart, 0, lambda p: {(): fn(p)})


def coordinate_differential(chart, i):
    """The 1-form dx_i."""
    return constant_form(chart, 1, {(i,): 1.0})


def form_from_components(chart, degree, components):
    """Form with coefficient functions point -> value, one per index tuple."""
    comp = dict(components)

    def cf(p):
        return {I: f(p) for I, f in comp.items()}

    return FormField(chart, degree, cf)


def wedge(a, b):
    """Wedge product with shuffle signs; graded-commutative and bilinear."""
    if a.chart != b.chart:
        raise ChartError(f"chart mismatch: {a.chart.name} vs {b.chart.name}")
    k = a.degree + b.degree
    if k > a.chart.dim:
        raise DegreeError(
            f"wedge degree {a.degree}+{b.degree} exceeds chart dimension {a.chart.dim}"
        )
    a_fn, b_fn = a.coeff_fn, b.coeff_fn

    def cf(p):
        ac = a_fn(p)
        bc = b_fn(p)
        out = {}
        for I, av in ac.items():
            for J, bv in bc.items():
                sign = perm_sign(I + J)
                if sign == 0:
                    continue
                K = tuple(sorted(I + J))
                term = sign * av * bv
                out[K] = out.get(K, 0.0) + term
        return out

    return FormField(a.chart, k, cf)


def ext_d(a):
    """Exterior derivative via AD partials of the coefficient field."""
    if a.degree >= a.chart.dim:
        raise DegreeError(f"cannot apply d to a top-degree form on {a.chart.name}")
    n = a.chart.dim
    a_fn = a.coeff_fn

    def cf(p):
        xs = tuple(lift_vars(p))
        out = {}
        for I, v in a_fn(xs).items():
            dv = partials_of(v, n)
            for j in range(n):
                if j in I:
                    continue
                sign = perm_sign((j,) + I)
                K = tuple(sorted((j,) + I))
                out[K] = out.get(K, 0.0) + sign * dv[j]
        return out

    return FormField(a.chart, a.degree + 1, cf)


@dataclass(frozen=True)
class ChartMap:
    """Smooth map between charts with an AD-computable Jacobian."""

    source: Chart
    target: Chart
    fn: Callable                      # point on source -> tuple on target
    inverse: Optional[Callable] = None

    def __call__(self, point):
        return self.fn(tuple(point))

    def jacobian_at(self, point):
        xs = tuple(lift_vars(point))
        ys = self.fn(xs)
        n = len(point)
        return [[value_of(p) for p in partials_of(y, n)] for y in ys]


def identity_map(chart):
    return ChartMap(chart, chart, lambda p: p, inverse=lambda p: p)


def compose_maps(g, f):
    """g after f."""
    if f.target != g.source:
        raise ChartError(f"cannot compose {f.target.name} -> {g.source.name}")
    inv = None
    if f.inverse is not None and g.inverse is not None:
        f_inv, g_inv = f.inverse, g.inverse
        inv = lambda p: f_inv(g_inv(p))
    return ChartMap(f.source, g.target, lambda p: g.fn(tuple(f.fn(p))), inverse=inv)


def _minor_det(mat, rows, cols):
    """Determinant of the submatrix mat[rows][cols] (len <= 4)."""
    k = len(rows)
    if k == 0:
        return 1.0
    if k == 1:
        return mat[rows[0]][cols[0]]
    if k == 2:
        return (mat[rows[0]][cols[0]] * mat[rows[1]][cols[1]]
                - mat[rows[0]][cols[1]] * mat[rows[1]][cols[0]])
    total = 0.0
    for perm in itertools.permutations(range(k)):
        sign = perm_sign(perm)
        term = sign
        for i in range(k):
            term = term * mat[rows[i]][cols[perm[i]]]
        total = total + term
    return total


def pullback(F, a):
    """Pullback of the form a along the chart map F."""
    if a.chart != F.target:
        raise ChartError(
            f"form lives on {a.chart.name}, map targets {F.target.name}"
        )
    n = F.source.dim
    k = a.degree
    a_fn = a.coeff_fn

    def cf(p):
        xs = tuple(lift_vars(p))
        ys = F.fn(xs)
        vals = tuple(y.val if isinstance(y, Scalar) else y for y in ys)
        jac = [partials_of(y, n) for y in ys]
        ac = a_fn(vals)
        out = {}
        for J in itertools.combinations(range(n), k):
            total = 0.0
            for I, av in ac.items():
                d = _minor_det(jac, I, J)
                total = total + av * d
            out[J] = total
        return out

    return FormField(F.source, k, cf)


@dataclass(frozen=True)
class MetricField:
    """Symmetric metric coefficient field with Lorentz signature (-,+,+,+)."""

    chart: Chart
    fn: Callable                      # point -> dim x dim nested sequence

    def matrix_at(self, point):
        return self.fn(tuple(point))

    def values_at(self, point):
        g = self.fn(tuple(point))
        return [[value_of(g[i][j]) for j in range(self.chart.dim)]
                for i in range(self.chart.dim)]


def det4(g):
    return _minor_det(g, (0, 1, 2, 3), (0, 1, 2, 3))


def inverse4(g, det=None):
    """Inverse of a 4x4 matrix via the adjugate (AD-friendly)."""
    if det is None:
        det = det4(g)
    idx = (0, 1, 2, 3)
    inv = [[None] * 4 for _ in range(4)]
    for i in range(4):
        rows = tuple(r for r in idx if r != i)
        for j in range(4):
            cols = tuple(c for c in idx if c != j)
            cof = _minor_det(g, rows, cols)
            if (i + j) % 2:
                cof = -cof
            inv[j][i] = cof / det
    return inv


def pullback_metric(F, g):
    """J^T g J along the chart map F."""
    if g.chart != F.target:
        raise ChartError(
            f"metric lives on {g.chart.name}, map targets {F.target.name}"
        )
    n = F.source.dim
    g_fn = g.fn

    def fn(p):
        xs = tuple(lift_vars(p))
        ys = F.fn(xs)
        vals = tuple(y.val if isinstance(y, Scalar) else y for y in ys)
        jac = [partials_of(y, n) for y in ys]
        G = g_fn(vals)
        m = len(ys)
        out = [[0.0] * n for _ in range(n)]
        for a in range(n):
            for b in range(a, n):
                tot = 0.0
                for i in range(m):
                    for j in range(m):
                        tot = tot + jac[i][a] * G[i][j] * jac[j][b]
                out[a][b] = tot
                out[b][a] = tot
        return out

    return MetricField(F.source, fn)


def minkowski_metric(chart):
    """Flat metric diag(-1, 1, 1, 1) on a 4-dimensional chart."""
    eta = [[-1.0 if i == j == 0 else (1.0 if i == j else 0.0)
            for j in range(4)] for i in range(4)]
    return MetricField(chart, lambda p: [row[:] for row in eta])


# Double Hodge star on a Lorentzian 4-manifold: signs per form degree.
STAR_STAR_SIGN = {k: -((-1) ** (k * (4 - k))) for k in range(5)}


def hodge_star(g, a, orientation=1):
    """Lorentz Hodge star of a k-form; orientation +-1 fixes the volume sign."""
    if g.chart != a.chart:
        raise ChartError(f"chart mismatch: {g.chart.name} vs {a.chart.name}")
    if g.chart.dim != 4:
        raise ChartError("Hodge star implemented on 4-dimensional charts only")
    k = a.degree
    g_fn = g.fn
    a_fn = a.coeff_fn
    full = (0, 1, 2, 3)

    def cf(p):
        G = g_fn(p)
        det = det4(G)
        if abs(value_of(det)) < 1e-14:
            raise SingularMetricError(
                f"|det g| < 1e-14 at {tuple(value_of(x) for x in p)}"
            )
        ginv = inverse4(G, det)
        # Lorentz signature: det < 0, so sqrt(|det|) = sqrt(-det).
        sqrtdet = ad.sqrt(-det)
        ac = a_fn(p)
        out = {}
        for I in itertools.combinations(full, k):
            raised = 0.0
            for K, av in ac.items():
                raised = raised + _minor_det(ginv, I, K) * av
            J = tuple(j for j in full if j not in I)
            sign = perm_sign(I + J)
            out[J] = out.get(J, 0.0) + orientation * sign * sqrtdet * raised
        return out

    return FormField(a.chart, 4 - k, cf)


def volume_form(g, orientation=1):
    """star(1): the metric volume form with the chosen orientation."""
    one = constant_form(g.chart, 0, {(): 1.0})
    return hodge_star(g, one, orientation)
