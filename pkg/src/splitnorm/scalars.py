"""Exact scalar arithmetic: rationals and Gaussian rationals.

Rationals are ``gmpy2.mpq`` when available (much faster) and
``fractions.Fraction`` otherwise; both expose ``numerator``/``denominator``
and interoperate with ints.  Complex values are :class:`GaussRat` pairs of
rationals.  Arithmetic auto-demotes to a plain rational whenever the
imaginary part cancels, so "is this real?" is a type check.
"""

from __future__ import annotations

import numbers

try:
    from gmpy2 import mpq as _mpq

    def rat(a=0, b=1):
        return _mpq(a, b)

except ImportError:  # pragma: no cover - exercised only without gmpy2
    from fractions import Fraction as _frac

    def rat(a=0, b=1):
        return _frac(a, b)


RAT_ZERO = rat(0)
RAT_ONE = rat(1)


def is_rational(x) -> bool:
    return isinstance(x, numbers.Rational)


class GaussRat:
    """A Gaussian rational re + im*i with exact rational parts, im != 0."""

    __slots__ = ("re", "im")

    def __init__(self, re, im):
        self.re = rat(re)
        self.im = rat(im)

    # -- conversions -------------------------------------------------
    @property
    def real(self):
        return self.re

    @property
    def imag(self):
        return self.im

    def conjugate(self):
        return gauss(self.re, -self.im)

    def __complex__(self):
        return complex(float(self.re), float(self.im))

    # -- arithmetic --------------------------------------------------
    def __add__(self, other):
        if isinstance(other, GaussRat):
            return gauss(self.re + other.re, self.im + other.im)
        if is_rational(other):
            return gauss(self.re + other, self.im)
        return NotImplemented

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, GaussRat):
            return gauss(self.re - other.re, self.im - other.im)
        if is_rational(other):
            return gauss(self.re - other, self.im)
        return NotImplemented

    def __rsub__(self, other):
        if is_rational(other):
            return gauss(other - self.re, -self.im)
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, GaussRat):
            return gauss(
                self.re * other.re - self.im * other.im,
                self.re * other.im + self.im * other.re,
            )
        if is_rational(other):
            return gauss(self.re * other, self.im * other)
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        if is_rational(other):
            return gauss(self.re / other, self.im / other)
        if isinstance(other, GaussRat):
            n = other.re * other.re + other.im * other.im
            return self * GaussRat(other.re / n, -other.im / n)
        return NotImplemented

    def __rtruediv__(self, other):
        if is_rational(other):
            n = self.re * self.re + self.im * self.im
            return gauss(other * self.re / n, -other * self.im / n)
        return NotImplemented

    def __neg__(self):
        return GaussRat(-self.re, -self.im)

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            return NotImplemented
        out = RAT_ONE
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    # -- comparison / hashing ----------------------------------------
    def __eq__(self, other):
        if isinstance(other, GaussRat):
            return self.re == other.re and self.im == other.im
        if is_rational(other):
            return self.im == 0 and self.re == other
        return NotImplemented

    def __hash__(self):
        return hash((self.re, self.im))

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __repr__(self):
        return f"GaussRat({self.re!s}, {self.im!s})"


def gauss(re, im=0):
    """Exact complex scalar; returns a plain rational when im == 0."""
    re = rat(re)
    im = rat(im)
    if im == 0:
        return re
    g = GaussRat.__new__(GaussRat)
    g.re = re
    g.im = im
    return g


_RAT_TYPE = type(RAT_ONE)


def as_scalar(x):
    """Coerce to an exact scalar.  Floats are rejected: exactness is the contract."""
    if isinstance(x, GaussRat) or type(x) is _RAT_TYPE:
        return x
    if is_rational(x):  # ints, Fractions: normalize to the one rational type
        return rat(x.numerator, x.denominator)
    if isinstance(x, (complex, float)):
        raise TypeError(f"floats are not exact scalars: {x!r}")
    raise TypeError(f"cannot interpret {x!r} as an exact scalar")


def re_part(x):
    return x.re if isinstance(x, GaussRat) else x


def im_part(x):
    return x.im if isinstance(x, GaussRat) else RAT_ZERO


def conj(x):
    return x.conjugate() if isinstance(x, GaussRat) else x


def abs_sq(x):
    """|x|^2 as an exact rational."""
    if isinstance(x, GaussRat):
        return x.re * x.re + x.im * x.im
    return x * x


def to_float(x):
    """Scalar to float (real) or complex."""
    if isinstance(x, GaussRat):
        return complex(float(x.re), float(x.im))
    return float(x)


def rat_from_float(x: float):
    """Exact rational value of a binary float."""
    from fractions import Fraction

    return rat(Fraction(x))


# -- string forms (JSON / CLI) ----------------------------------------


def format_rat(x) -> str:
    """``num/den`` with the ``/den`` omitted for integers."""
    n, d = x.numerator, x.denominator
    return str(int(n)) if d == 1 else f"{int(n)}/{int(d)}"


def parse_rat(text: str):
    """Parse ``num`` or ``num/den`` with optional sign; integers only."""
    from .errors import ParseError

    s = text.strip()
    try:
        if "/" in s:
            a, b = s.split("/")
            num, den = int(a.strip()), int(b.strip())
            if den == 0:
                raise ValueError("zero denominator")
            return rat(num, den)
        return rat(int(s))
    except ValueError as exc:
        raise ParseError(f"not a rational: {text!r}") from exc


def format_scalar(x) -> list[str]:
    """Coefficient as the ``[re, im]`` pair of rational strings."""
    return [format_rat(re_part(x)), format_rat(im_part(x))]


def parse_scalar(pair):
    from .errors import ParseError

    if isinstance(pair, str):
        return parse_rat(pair)
    if isinstance(pair, (list, tuple)) and len(pair) == 2:
        return gauss(parse_rat(pair[0]), parse_rat(pair[1]))
    raise ParseError(f"not a coefficient: {pair!r}")
