"""Fibonacci, Lucas and generalized Fibonacci numbers; Fibonomial coefficients."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import OutOfRange
from .exact import Rational, format_rational, parse_rational

__all__ = ["Seeds", "FIBONACCI", "LUCAS", "fib", "fib_pair", "genfib", "fibonomial"]

_TABLE_LIMIT = 64
_TABLE = [0, 1]
for _ in range(_TABLE_LIMIT):
    _TABLE.append(_TABLE[-1] + _TABLE[-2])
_TABLE = tuple(_TABLE)  # F_0 .. F_65


def _fib_pair_nonneg(n: int) -> tuple[int, int]:
    """(F_n, F_{n+1}) for n >= 0 by fast doubling."""
    if n < _TABLE_LIMIT:
        return _TABLE[n], _TABLE[n + 1]
    a, b = 0, 1
    for bit in bin(n)[2:]:
        # F_2m = F_m (2 F_{m+1} - F_m), F_2m+1 = F_m^2 + F_{m+1}^2
        c = a * (2 * b - a)
        d = a * a + b * b
        if bit == "1":
            a, b = d, c + d
        else:
            a, b = c, d
    return a, b


def fib_pair(i: int) -> tuple[int, int]:
    """(F_i, F_{i+1}) for any integer ``i``."""
    if i >= 0:
        return _fib_pair_nonneg(i)
    return fib(i), fib(i + 1)


def fib(i: int) -> int:
    """F_i for any integer ``i``, using F_{-i} = (-1)^(i+1) F_i."""
    if i >= 0:
        return _fib_pair_nonneg(i)[0]
    f = _fib_pair_nonneg(-i)[0]
    return f if (-i) % 2 == 1 else -f


@dataclass(frozen=True)
class Seeds:
    """The pair (G_0, G_1) defining a generalized Fibonacci sequence."""

    g0: Rational
    g1: Rational

    def __post_init__(self):
        object.__setattr__(self, "g0", Rational(self.g0))
        object.__setattr__(self, "g1", Rational(self.g1))

    def __getitem__(self, i: int) -> Rational:
        return genfib(self, i)

    @classmethod
    def parse(cls, text: str) -> "Seeds":
        parts = text.split(",")
        if len(parts) != 2:
            raise ValueError(f"seeds must look like 'G0,G1', got {text!r}")
        return cls(parse_rational(parts[0]), parse_rational(parts[1]))

    def __str__(self):
        return f"{format_rational(self.g0)},{format_rational(self.g1)}"


FIBONACCI = Seeds(0, 1)
LUCAS = Seeds(2, 1)


def genfib(seeds: Seeds, i: int) -> Rational:
    """G_i = F_{i-1} G_0 + F_i G_1, valid for every integer i."""
    f_prev, f_cur = fib(i - 1), fib(i)
    return f_prev * seeds.g0 + f_cur * seeds.g1


def fibonomial(p: int, q: int) -> int:
    """The Fibonomial coefficient prod_{j=1..q} F_{p-q+j} / F_j."""
    if p < 0 or q < 0 or q > p:
        raise OutOfRange(f"fibonomial needs 0 <= q <= p, got p={p}, q={q}")
    num = den = 1
    for j in range(1, q + 1):
        num *= fib(p - q + j)
        den *= fib(j)
    value, rem = divmod(num, den)
    assert rem == 0, "Fibonomial coefficient is not an integer"
    return value
