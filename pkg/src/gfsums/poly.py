"""Dense univariate polynomials and reduced rational functions over Q(i).

The variable is called ``w`` throughout.  ``D`` denotes the operator
``w * d/dw``; on a monomial ``w**e`` it multiplies by ``e``.
"""

from __future__ import annotations

import re

from typing import Iterable, Sequence

from .errors import PoleAtPoint, ZeroDenominator
from .exact import ZERO, GaussianRational, as_gauss, format_gauss, is_scalar, parse_gauss

__all__ = [
    "Poly",
    "RatFun",
    "poly_arith",
    "ratfun_reduce",
    "apply_D",
    "eval_at",
]


class Poly:
    """Polynomial with GaussianRational coefficients, lowest degree first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [as_gauss(c) for c in coeffs]
        while cs and cs[-1].is_zero():
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    @classmethod
    def _trusted(cls, cs: list) -> "Poly":
        while cs and cs[-1].is_zero():
            cs.pop()
        self = object.__new__(cls)
        object.__setattr__(self, "coeffs", tuple(cs))
        return self

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    @classmethod
    def const(cls, c) -> "Poly":
        return cls([c])

    @classmethod
    def monomial(cls, e: int, c=1) -> "Poly":
        return cls([0] * e + [c])

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def lead(self) -> GaussianRational:
        return self.coeffs[-1] if self.coeffs else ZERO

    def __getitem__(self, i: int) -> GaussianRational:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else ZERO

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        if is_scalar(other):
            return self == Poly.const(other)
        return NotImplemented

    def __hash__(self):
        return hash(("Poly", self.coeffs))

    def __repr__(self):
        return f"Poly({format_poly(self)!r})"

    def __str__(self):
        return format_poly(self)

    # -- ring operations -------------------------------------------------

    def __neg__(self):
        return Poly._trusted([-c for c in self.coeffs])

    def __add__(self, other):
        other = _as_poly(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return Poly._trusted(out)

    __radd__ = __add__

    def __sub__(self, other):
        other = _as_poly(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if is_scalar(other):
            c = as_gauss(other)
            return Poly._trusted([a * c for a in self.coeffs])
        other = _as_poly(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly._trusted([])
        out = [ZERO] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x.is_zero():
                continue
            for j, y in enumerate(b):
                out[i + j] = out[i + j] + x * y
        return Poly._trusted(out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if not isinstance(e, int) or e < 0:
            return NotImplemented
        result, base = Poly.const(1), self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def divmod(self, other: "Poly") -> tuple["Poly", "Poly"]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = other.degree
        inv_lead = other.lead().inverse()
        quot = [ZERO] * max(len(rem) - dq, 0)
        for i in range(len(rem) - 1, dq - 1, -1):
            c = rem[i]
            if c.is_zero():
                continue
            f = c * inv_lead
            quot[i - dq] = f
            for j, d in enumerate(other.coeffs):
                rem[i - dq + j] = rem[i - dq + j] - f * d
        return Poly._trusted(quot), Poly._trusted(rem[:dq] if dq > 0 else [])

    def __floordiv__(self, other):
        return self.divmod(_as_poly(other))[0]

    def __mod__(self, other):
        return self.divmod(_as_poly(other))[1]

    def monic(self) -> "Poly":
        if self.is_zero():
            return self
        return self * self.lead().inverse()

    def gcd(self, other: "Poly") -> "Poly":
        a, b = self, other
        while not b.is_zero():
            a, b = b, a % b
        return a.monic()

    # -- calculus / evaluation ------------------------------------------

    def D(self) -> "Poly":
        """``w * d/dw``: the coefficient of ``w**e`` is multiplied by ``e``."""
        return Poly._trusted([c * e for e, c in enumerate(self.coeffs)])

    def derivative(self) -> "Poly":
        return Poly._trusted([c * e for e, c in enumerate(self.coeffs)][1:])

    def __call__(self, x):
        x = as_gauss(x)
        acc = ZERO
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def is_real(self) -> bool:
        return all(c.is_real() for c in self.coeffs)


def _as_poly(x):
    if isinstance(x, Poly):
        return x
    if is_scalar(x):
        return Poly.const(x)
    return NotImplemented


def poly_arith(op: str, p: Poly, q: Poly) -> Poly:
    """Apply ``op`` in {add, sub, mul, gcd}; gcd is returned monic."""
    if op == "add":
        return p + q
    if op == "sub":
        return p - q
    if op == "mul":
        return p * q
    if op == "gcd":
        if p.is_zero() and q.is_zero():
            raise ValueError("gcd(0, 0) is undefined")
        return p.gcd(q)
    raise ValueError(f"unknown operation {op!r}")


class RatFun:
    """Reduced quotient ``num/den`` with a monic denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        num = _as_poly(num)
        den = Poly.const(1) if den is None else _as_poly(den)
        if num is NotImplemented or den is NotImplemented:
            raise TypeError("RatFun needs polynomial or scalar parts")
        if den.is_zero():
            raise ZeroDenominator("rational function with zero denominator")
        if num.is_zero():
            num, den = num, Poly.const(1)
        else:
            g = num.gcd(den)
            if g.degree > 0:
                num, den = num // g, den // g
            lc = den.lead()
            if lc != 1:
                inv = lc.inverse()
                num, den = num * inv, den * inv
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, name, value):
        raise AttributeError("RatFun is immutable")

    @classmethod
    def w(cls) -> "RatFun":
        return cls(Poly([0, 1]))

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_poly(self) -> bool:
        return self.den.degree == 0

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        other = _as_ratfun(other)
        if other is NotImplemented:
            return other
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        if self.is_poly() and self.num.degree <= 0:
            return hash(self.num[0])
        return hash((self.num, self.den))

    def __repr__(self):
        return f"RatFun({format_ratfun(self)!r})"

    def __str__(self):
        return format_ratfun(self)

    def __neg__(self):
        r = object.__new__(RatFun)
        object.__setattr__(r, "num", -self.num)
        object.__setattr__(r, "den", self.den)
        return r

    def __add__(self, other):
        other = _as_ratfun(other)
        if other is NotImplemented:
            return other
        if self.den == other.den:
            return RatFun(self.num + other.num, self.den)
        return RatFun(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __sub__(self, other):
        other = _as_ratfun(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = _as_ratfun(other)
        if other is NotImplemented:
            return other
        return RatFun(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _as_ratfun(other)
        if other is NotImplemented:
            return other
        if other.is_zero():
            raise ZeroDivisionError("division by the zero rational function")
        return RatFun(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        other = _as_ratfun(other)
        if other is NotImplemented:
            return other
        return other / self

    def __pow__(self, e: int):
        if not isinstance(e, int):
            return NotImplemented
        if e < 0:
            return RatFun(self.den, self.num) ** (-e)
        return RatFun(self.num**e, self.den**e)

    def D(self) -> "RatFun":
        # (w num' den - w num den') / den^2, reduced on construction
        return RatFun(self.num.D() * self.den - self.num * self.den.D(), self.den * self.den)

    def __call__(self, x):
        x = as_gauss(x)
        d = self.den(x)
        if d.is_zero():
            raise PoleAtPoint(f"denominator vanishes at w = {format_gauss(x)}")
        return self.num(x) / d


def _as_ratfun(x):
    if isinstance(x, RatFun):
        return x
    if isinstance(x, Poly) or is_scalar(x):
        return RatFun(x)
    return NotImplemented


def ratfun_reduce(num: Poly, den: Poly) -> RatFun:
    return RatFun(num, den)


def apply_D(f):
    """Apply ``D = w d/dw`` to a Poly or RatFun."""
    if isinstance(f, Poly):
        return f.D()
    return _as_ratfun(f).D()


def eval_at(f, w0) -> GaussianRational:
    """Exact value of ``f`` at ``w0``; raises PoleAtPoint on a pole."""
    return _as_ratfun(f)(w0)


# -- text rendering ------------------------------------------------------------


def poly_coeff_strings(p: Poly) -> list[str]:
    """Ascending-degree coefficient strings, the wire format for polynomials."""
    return [format_gauss(c) for c in p.coeffs]


def poly_from_strings(items: Sequence[str]) -> Poly:
    return Poly(parse_gauss(s) for s in items)


def format_poly(p: Poly, var: str = "w") -> str:
    """Human-readable form, highest degree first, e.g. ``w^3 - 2*w^2 + 1``."""
    if p.is_zero():
        return "0"
    parts = []
    for e in range(p.degree, -1, -1):
        c = p.coeffs[e]
        if c.is_zero():
            continue
        neg = c.is_real() and c.re < 0
        mag = -c if neg else c
        if e == 0:
            body = format_gauss(mag)
        else:
            mono = var if e == 1 else f"{var}^{e}"
            if mag == 1:
                body = mono
            elif mag.is_real():
                body = f"{format_gauss(mag)}*{mono}"
            else:
                body = f"({format_gauss(mag)})*{mono}"
        if not mag.is_real() and e == 0:
            body = f"({body})"
        if not parts:
            parts.append(("-" if neg else "") + body)
        else:
            parts.append(("- " if neg else "+ ") + body)
    return " ".join(parts)


def format_ratfun(f: RatFun, var: str = "w") -> str:
    if f.is_poly():
        return format_poly(f.num, var)
    return f"({format_poly(f.num, var)})/({format_poly(f.den, var)})"


_TOKEN_RE = re.compile(r"\s*(?:(\d+)|([a-z])|(\*\*|[-+*/^()]))")


def _tokenize(text: str) -> list[str]:
    pos, out = 0, []
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None or m.end() == pos:
            raise ValueError(f"unexpected character at {pos} in {text!r}")
        tok = next(g for g in m.groups() if g is not None)
        out.append("^" if tok == "**" else tok)
        pos = m.end()
    return out


class _ExprParser:
    """Recursive descent over ``+ - * / ^`` and parentheses, evaluated in Q(i)(var)."""

    def __init__(self, text: str, var: str):
        self.toks = _tokenize(text)
        self.pos = 0
        self.var = var
        self.text = text

    def peek(self):
        return self.toks[self.pos] if self.pos < len(self.toks) else None

    def take(self):
        tok = self.peek()
        if tok is None:
            raise ValueError(f"unexpected end of {self.text!r}")
        self.pos += 1
        return tok

    def parse(self) -> "RatFun":
        value = self.expr()
        if self.peek() is not None:
            raise ValueError(f"trailing input {self.peek()!r} in {self.text!r}")
        return value

    def expr(self):
        value = self.term()
        while self.peek() in ("+", "-"):
            op = self.take()
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def term(self):
        value = self.unary()
        while self.peek() in ("*", "/"):
            op = self.take()
            rhs = self.unary()
            value = value * rhs if op == "*" else value / rhs
        return value

    def unary(self):
        if self.peek() in ("+", "-"):
            op = self.take()
            value = self.unary()
            return -value if op == "-" else value
        return self.power()

    def power(self):
        base = self.atom()
        if self.peek() == "^":
            self.take()
            tok = self.take()
            if tok == "(":
                neg = self.peek() == "-"
                if neg:
                    self.take()
                tok = self.take()
                if self.take() != ")":
                    raise ValueError(f"bad exponent in {self.text!r}")
                e = -int(tok) if neg else int(tok)
            elif tok.isdigit():
                e = int(tok)
            else:
                raise ValueError(f"bad exponent {tok!r} in {self.text!r}")
            return base**e
        return base

    def atom(self):
        tok = self.take()
        if tok.isdigit():
            return RatFun(int(tok))
        if tok == "(":
            value = self.expr()
            if self.take() != ")":
                raise ValueError(f"unbalanced parentheses in {self.text!r}")
            return value
        if tok == self.var:
            return RatFun(Poly([0, 1]))
        if tok == "i":
            return RatFun(GaussianRational(0, 1))
        raise ValueError(f"unexpected token {tok!r} in {self.text!r}")


def parse_expr(text: str, var: str = "w") -> RatFun:
    """Evaluate an arithmetic expression in ``var`` (and ``i``) to a RatFun."""
    return _ExprParser(text, var).parse()


def parse_poly(text: str, var: str = "w") -> Poly:
    """Inverse of :func:`format_poly`."""
    f = parse_expr(text, var)
    if not f.is_poly():
        raise ValueError(f"not a polynomial: {text!r}")
    return f.num


def parse_ratfun(text: str, var: str = "w") -> RatFun:
    """Inverse of :func:`format_ratfun`; accepts any expression in ``var``."""
    return parse_expr(text, var)
