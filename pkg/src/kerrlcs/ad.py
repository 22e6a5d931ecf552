"""Forward-mode automatic differentiation on at most 4 active variables.

A ``Scalar`` carries a value and a fixed-length tuple of partial derivatives.
Values and partials may themselves be ``Scalar``s, which is how second
derivatives are obtained: wrap first-order scalars in another layer and read
the Hessian off the nested partials.  There is no tape; everything is
pointwise and freely copyable.
"""

from __future__ import annotations

import math

from .errors import ConfigurationError, DomainError

MAX_VARS = 4


def value_of(x):
    """Strip all AD layers and return the underlying float."""
    while isinstance(x, Scalar):
        x = x.val
    return x


def partials_of(x, n):
    """Partial tuple of x with respect to n active variables (zeros for constants)."""
    if isinstance(x, Scalar):
        if len(x.d) != n:
            raise ConfigurationError(
                f"scalar carries {len(x.d)} partials, expected {n}"
            )
        return x.d
    return (0.0,) * n


class Scalar:
    """Forward-mode AD number: value plus partials w.r.t. the active variables."""

    __slots__ = ("val", "d")

    def __init__(self, val, d=()):
        self.val = val
        self.d = tuple(d)

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other):
        if isinstance(other, Scalar):
            return Scalar(self.val + other.val,
                          tuple(a + b for a, b in zip(self.d, other.d)))
        return Scalar(self.val + other, self.d)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, Scalar):
            return Scalar(self.val - other.val,
                          tuple(a - b for a, b in zip(self.d, other.d)))
        return Scalar(self.val - other, self.d)

    def __rsub__(self, other):
        return Scalar(other - self.val, tuple(-a for a in self.d))

    def __mul__(self, other):
        if isinstance(other, Scalar):
            return Scalar(self.val * other.val,
                          tuple(a * other.val + self.val * b
                                for a, b in zip(self.d, other.d)))
        return Scalar(self.val * other, tuple(a * other for a in self.d))

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, Scalar):
            inv = 1.0 / other.val
            q = self.val * inv
            return Scalar(q, tuple((a - q * b) * inv
                                   for a, b in zip(self.d, other.d)))
        inv = 1.0 / other
        return Scalar(self.val * inv, tuple(a * inv for a in self.d))

    def __rtruediv__(self, other):
        inv = 1.0 / self.val
        q = other * inv
        return Scalar(q, tuple(-q * inv * a for a in self.d))

    def __neg__(self):
        return Scalar(-self.val, tuple(-a for a in self.d))

    def __pow__(self, p):
        if not isinstance(p, (int, float)):
            raise TypeError("only numeric exponents are supported")
        v = self.val ** p
        dv = p * self.val ** (p - 1)
        return Scalar(v, tuple(dv * a for a in self.d))

    def __repr__(self):
        return f"Scalar({self.val!r}, d={self.d!r})"


def make_vars(values):
    """Seed the given values as active variables (identity partials matrix)."""
    n = len(values)
    if not 1 <= n <= MAX_VARS:
        raise ConfigurationError(f"need 1..{MAX_VARS} variables, got {n}")
    return [Scalar(values[i], tuple(1.0 if j == i else 0.0 for j in range(n)))
            for i in range(n)]


def lift_vars(point):
    """Open a fresh AD layer over an already (possibly) lifted point."""
    n = len(point)
    if not 1 <= n <= MAX_VARS:
        raise ConfigurationError(f"need 1..{MAX_VARS} variables, got {n}")
    return [Scalar(point[i], tuple(1.0 if j == i else 0.0 for j in range(n)))
            for i in range(n)]


# -- elementary functions ---------------------------------------------------
# Each accepts floats or Scalars (nested to any depth) and applies the chain
# rule recursively.

def exp(x):
    if isinstance(x, Scalar):
        v = exp(x.val)
        return Scalar(v, tuple(v * a for a in x.d))
    return math.exp(x)


def log(x):
    if isinstance(x, Scalar):
        if value_of(x) <= 0.0:
            raise DomainError("log", value_of(x))
        return Scalar(log(x.val), tuple(a / x.val for a in x.d))
    if x <= 0.0:
        raise DomainError("log", x)
    return math.log(x)


def sin(x):
    if isinstance(x, Scalar):
        c = cos(x.val)
        return Scalar(sin(x.val), tuple(c * a for a in x.d))
    return math.sin(x)


def cos(x):
    if isinstance(x, Scalar):
        s = sin(x.val)
        return Scalar(cos(x.val), tuple(-s * a for a in x.d))
    return math.cos(x)


def sqrt(x):
    if isinstance(x, Scalar):
        if value_of(x) < 0.0:
            raise DomainError("sqrt", value_of(x))
        v = sqrt(x.val)
        return Scalar(v, tuple(a / (2.0 * v) for a in x.d))
    if x < 0.0:
        raise DomainError("sqrt", x)
    return math.sqrt(x)


def sinh(x):
    if isinstance(x, Scalar):
        c = cosh(x.val)
        return Scalar(sinh(x.val), tuple(c * a for a in x.d))
    return math.sinh(x)


def cosh(x):
    if isinstance(x, Scalar):
        s = sinh(x.val)
        return Scalar(cosh(x.val), tuple(s * a for a in x.d))
    return math.cosh(x)


def arcsinh(x):
    if isinstance(x, Scalar):
        w = sqrt(x.val * x.val + 1.0)
        return Scalar(arcsinh(x.val), tuple(a / w for a in x.d))
    return math.asinh(x)


def arccos(x):
    if isinstance(x, Scalar):
        xv = value_of(x)
        if not -1.0 <= xv <= 1.0:
            raise DomainError("arccos", xv)
        w = sqrt(1.0 - x.val * x.val)
        return Scalar(arccos(x.val), tuple(-a / w for a in x.d))
    if not -1.0 <= x <= 1.0:
        raise DomainError("arccos", x)
    return math.acos(x)


def atan2(y, x):
    """Two-argument arctangent, values in (-pi, pi]."""
    if isinstance(y, Scalar) or isinstance(x, Scalar):
        n = len(y.d) if isinstance(y, Scalar) else len(x.d)
        dy = partials_of(y, n)
        dx = partials_of(x, n)
        yv = y.val if isinstance(y, Scalar) else y
        xv = x.val if isinstance(x, Scalar) else x
        r2 = xv * xv + yv * yv
        return Scalar(atan2(yv, xv),
                      tuple((xv * a - yv * b) / r2 for a, b in zip(dy, dx)))
    return math.atan2(y, x)


ELEMENTARY = {
    "exp": exp, "log": log, "sin": sin, "cos": cos, "sqrt": sqrt,
    "atan2": atan2, "arcsinh": arcsinh, "sinh": sinh, "cosh": cosh,
}


def elementary(name, *args):
    """Apply a named elementary function (see ELEMENTARY) to AD arguments."""
    try:
        f = ELEMENTARY[name]
    except KeyError:
        raise ConfigurationError(f"unknown elementary function {name!r}") from None
    return f(*args)


def gradient(f, values):
    """First partials of f(list of scalars) at the given values."""
    xs = make_vars(values)
    out = f(xs)
    return [value_of(p) for p in partials_of(out, len(values))]


def hessian(f, values):
    """Full Hessian of f at the given values via nested first-order scalars."""
    n = len(values)
    inner = make_vars(values)
    outer = [Scalar(inner[i], tuple(1.0 if j == i else 0.0 for j in range(n)))
             for i in range(n)]
    out = f(outer)
    rows = partials_of(out, n)
    return [[value_of(partials_of(row, n)[j]) for j in range(n)] for row in rows]


# -- complex scalars --------------------------------------------------------

class CScalar:
    """Complex number with AD-capable real and imaginary parts."""

    __slots__ = ("re", "im")

    def __init__(self, re, im=0.0):
        self.re = re
        self.im = im

    def __add__(self, other):
        other = as_cscalar(other)
        return CScalar(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        other = as_cscalar(other)
        return CScalar(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        return as_cscalar(other) - self

    def __mul__(self, other):
        other = as_cscalar(other)
        return CScalar(self.re * other.re - self.im * other.im,
                       self.re * other.im + self.im * other.re)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = as_cscalar(other)
        den = other.re * other.re + other.im * other.im
        return CScalar((self.re * other.re + self.im * other.im) / den,
                       (self.im * other.re - self.re * other.im) / den)

    def __rtruediv__(self, other):
        return as_cscalar(other) / self

    def __neg__(self):
        return CScalar(-self.re, -self.im)

    def conj(self):
        return CScalar(self.re, -self.im)

    def abs2(self):
        return self.re * self.re + self.im * self.im

    def __repr__(self):
        return f"CScalar({self.re!r}, {self.im!r})"


def as_cscalar(x):
    if isinstance(x, CScalar):
        return x
    if isinstance(x, complex):
        return CScalar(x.real, x.imag)
    return CScalar(x, 0.0)


def cexp_i(phi):
    """exp(i*phi) as a CScalar."""
    return CScalar(cos(phi), sin(phi))
