"""Exact scalars: rationals, Gaussian rationals and signs in Q(sqrt 5).

``Rational`` is gmpy2's ``mpq`` when gmpy2 is importable and
:class:`fractions.Fraction` otherwise; both keep the lowest-terms,
positive-denominator form and compare and hash alike.  Gaussian rationals
wrap a pair of them.  Nothing here touches floating point.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from numbers import Rational as _RationalABC

from .errors import DivisionByZero, ZeroDenominator

try:
    from gmpy2 import mpq as Rational
except ImportError:  # pragma: no cover
    from fractions import Fraction as Rational

__all__ = [
    "Rational",
    "GaussianRational",
    "QuadraticSurd",
    "I",
    "rat_normalize",
    "gauss_arith",
    "surd_sign",
    "as_gauss",
    "is_scalar",
    "format_rational",
    "parse_rational",
    "format_gauss",
    "parse_gauss",
]


def rat_normalize(num: int, den: int) -> Rational:
    """Return ``num/den`` in lowest terms with a positive denominator."""
    if den == 0:
        raise ZeroDenominator(f"{num}/0")
    return Rational(num, den)


class GaussianRational:
    """An element ``re + im*i`` of Q(i).

    Instances are immutable and hash like the equal Fraction when the
    imaginary part is zero, so ``GaussianRational(3) == 3`` and both can be
    used as the same dict key.
    """

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        object.__setattr__(self, "re", Rational(re))
        object.__setattr__(self, "im", Rational(im))

    @classmethod
    def _make(cls, re, im) -> "GaussianRational":
        self = object.__new__(cls)
        object.__setattr__(self, "re", re)
        object.__setattr__(self, "im", im)
        return self

    def __setattr__(self, name, value):
        raise AttributeError("GaussianRational is immutable")

    def __reduce__(self):
        return (GaussianRational, (self.re, self.im))

    # -- predicates -------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.re and not self.im

    def is_real(self) -> bool:
        return not self.im

    def __bool__(self) -> bool:
        return not self.is_zero()

    # -- arithmetic -------------------------------------------------------

    def __neg__(self):
        return GaussianRational._make(-self.re, -self.im)

    def __pos__(self):
        return self

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return GaussianRational._make(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return GaussianRational._make(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        a, b, c, d = self.re, self.im, other.re, other.im
        if not b:
            if not d:
                return GaussianRational._make(a * c, _ZERO)
            return GaussianRational._make(a * c, a * d)
        if not d:
            return GaussianRational._make(a * c, b * c)
        return GaussianRational._make(a * c - b * d, a * d + b * c)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return other * self.inverse()

    def inverse(self) -> "GaussianRational":
        if self.is_zero():
            raise DivisionByZero("division by zero in Q(i)")
        if not self.im:
            return GaussianRational._make(1 / self.re, _ZERO)
        n = self.norm()
        return GaussianRational._make(self.re / n, -self.im / n)

    def __pow__(self, e: int):
        if not isinstance(e, int):
            return NotImplemented
        if e < 0:
            return self.inverse() ** (-e)
        if not self.im:
            return GaussianRational._make(self.re**e, _ZERO)
        result = ONE
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def conjugate(self) -> "GaussianRational":
        return GaussianRational._make(self.re, -self.im)

    def norm(self) -> Rational:
        """Squared magnitude ``re**2 + im**2``."""
        return self.re * self.re + self.im * self.im

    # -- comparison / hashing --------------------------------------------

    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        if not self.im:
            return hash(self.re)
        return hash((self.re, self.im))

    def __repr__(self):
        return f"GaussianRational({format_gauss(self)!r})"

    def __format__(self, spec):
        return format(str(self), spec)

    def __str__(self):
        return format_gauss(self)


_ZERO = Rational(0)
ZERO = GaussianRational._make(_ZERO, _ZERO)
ONE = GaussianRational._make(Rational(1), _ZERO)
I = GaussianRational._make(_ZERO, Rational(1))
_RATIONAL_TYPES = (int, Rational)


def is_scalar(x) -> bool:
    """True for ints, rationals of any flavour, and Gaussian rationals."""
    return isinstance(x, (GaussianRational, int, Rational)) or (
        isinstance(x, _RationalABC) and not isinstance(x, bool)
    )


def _coerce(x):
    if isinstance(x, GaussianRational):
        return x
    if isinstance(x, _RATIONAL_TYPES) or isinstance(x, _RationalABC):
        return GaussianRational._make(Rational(x), _ZERO)
    return NotImplemented


def as_gauss(x) -> GaussianRational:
    """Embed an int, Fraction or GaussianRational (or its text form)."""
    if isinstance(x, str):
        return parse_gauss(x)
    g = _coerce(x)
    if g is NotImplemented:
        raise TypeError(f"cannot embed {type(x).__name__} in Q(i)")
    return g


def gauss_arith(op: str, x, y) -> GaussianRational:
    """Apply ``op`` in {add, sub, mul, div} to two Gaussian rationals."""
    x, y = as_gauss(x), as_gauss(y)
    if op == "add":
        return x + y
    if op == "sub":
        return x - y
    if op == "mul":
        return x * y
    if op == "div":
        return x / y
    raise ValueError(f"unknown operation {op!r}")


@dataclass(frozen=True)
class QuadraticSurd:
    """The real number ``a + b*sqrt(5)`` with rational ``a`` and ``b``."""

    a: Rational
    b: Rational = _ZERO

    def __post_init__(self):
        object.__setattr__(self, "a", Rational(self.a))
        object.__setattr__(self, "b", Rational(self.b))

    def sign(self) -> int:
        return surd_sign(self)


def _sgn(x) -> int:
    return (x > 0) - (x < 0)


def surd_sign(s: QuadraticSurd) -> int:
    """Exact sign of ``a + b*sqrt(5)``."""
    sa, sb = _sgn(s.a), _sgn(s.b)
    if sa >= 0 and sb >= 0:
        return 1 if (sa or sb) else 0
    if sa <= 0 and sb <= 0:
        return -1
    # opposite signs: the larger of a**2 and 5*b**2 wins
    return sa * _sgn(s.a * s.a - 5 * s.b * s.b)


# -- text formats ------------------------------------------------------------

_INT = r"[+-]?\d+"
_RAT = rf"{_INT}(?:/\d+)?"
_RAT_RE = re.compile(rf"^{_RAT}$")
_GAUSS_RE = re.compile(
    rf"^(?P<re>{_RAT})?"
    rf"(?:(?P<isign>[+-])?(?:(?P<imag>\d+(?:/\d+)?)\*)?(?P<i>i))?$"
)


def format_rational(x) -> str:
    x = Rational(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def parse_rational(text: str) -> Rational:
    text = text.strip()
    if not _RAT_RE.match(text):
        raise ValueError(f"not a rational: {text!r}")
    num, _, den = text.partition("/")
    return rat_normalize(int(num), int(den) if den else 1)


def format_gauss(x) -> str:
    x = as_gauss(x)
    if not x.im:
        return format_rational(x.re)
    im = x.im
    if im == 1:
        imag = "i"
    elif im == -1:
        imag = "-i"
    else:
        imag = f"{format_rational(im)}*i"
    if not x.re:
        return imag
    if im > 0:
        imag = "+" + imag
    return format_rational(x.re) + imag


def parse_gauss(text: str) -> GaussianRational:
    """Parse ``a/b+c/d*i`` and its shorthands (``i``, ``-i``, ``3``, ``1-i``)."""
    s = text.strip().replace(" ", "")
    m = _GAUSS_RE.match(s)
    if not s or m is None:
        raise ValueError(f"not a Gaussian rational: {text!r}")
    re_txt, isign, imag, i = m.group("re", "isign", "imag", "i")
    re_part = parse_rational(re_txt) if re_txt else _ZERO
    if not i:
        return GaussianRational._make(re_part, _ZERO)
    if re_txt and not isign:
        # "3i" or "1/2i" are not accepted; the imaginary part needs "*i"
        if imag is None:
            raise ValueError(f"not a Gaussian rational: {text!r}")
    im_part = parse_rational(imag) if imag else Rational(1)
    if isign == "-":
        im_part = -im_part
    return GaussianRational._make(re_part, im_part)
