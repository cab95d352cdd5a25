"""Closed forms for weighted generalized Fibonacci power sums.

For ``S_k^n(w, r) = sum_{j=0}^k w^j j^r G_j^n`` the starting point is the
order-``n`` characteristic polynomial ``P(w) = sum_s c_s w^(n-s+1)`` with
``c_s = C(n+1, s)_F * (-1)^ceil((n-s+1)/2)``.  Multiplying the annihilating
identity ``sum_s c_s G_{j+s}^n = 0`` by ``w^j`` and summing gives::

    S_k^n(w, 0) * P(w) = head(w) - w^k * tail(w)

where ``head`` only involves ``G_0^n .. G_n^n`` and ``tail`` only
``G_{k+1}^n .. G_{k+n+1}^n``.  Applying ``D^r`` (``D = w d/dw``) with the
Leibniz rule gives ``S_k^n(w, r)`` as a combination of
``A_n(w; m) = D^m (1/P(w))`` and the ``D``-images of each monomial, where
``D^q w^e = e^q w^e``.

Everything works over two scalar domains: GaussianRational for a numeric
weight, and :class:`~gfsums.poly.RatFun` in ``w`` for the symbolic weight.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from functools import lru_cache
from math import comb
from typing import Callable, Union

from .errors import Divergent, SingularWeight, UnsupportedBasis
from .exact import I, GaussianRational, QuadraticSurd, Rational, as_gauss, surd_sign
from .fib import Seeds, fib, fib_pair, fibonomial
from .poly import Poly, RatFun

__all__ = [
    "SYMBOLIC",
    "CharPoly",
    "AFunctions",
    "TailTerm",
    "ClosedForm",
    "SplitPart",
    "EvenOddSplit",
    "char_poly",
    "a_functions",
    "classic_a",
    "bar_a",
    "closed_form",
    "closed_form_n1",
    "rebase_tail",
    "canonicalize",
    "specialize",
    "evaluate_closed",
    "generating_function",
    "converges",
    "split_alternating",
    "evaluate_split_part",
    "span_sum",
]

SYMBOLIC = "symbolic"

Scalar = Union[GaussianRational, RatFun]


def _is_symbolic(w) -> bool:
    return isinstance(w, str) and w == SYMBOLIC


def _weight(w):
    """Normalize a weight argument to GaussianRational or SYMBOLIC."""
    if _is_symbolic(w):
        return SYMBOLIC
    return as_gauss(w)


def _ceil_half(u: int) -> int:
    return -((-u) // 2)


def span_sum(a: int, b: int, f: Callable[[int], object], *, strict: bool = False):
    """``sum_{j=a}^{b} f(j)`` with the reversed-range convention.

    For ``b < a`` the value is ``-sum_{j=b+1}^{a-1} f(j)``, so ``b = a - 1``
    is the empty sum.  With ``strict`` set, a genuinely reversed range
    (``b < a - 1``) is treated as a bug in the caller.
    """
    if b >= a:
        total = 0
        for j in range(a, b + 1):
            total = total + f(j)
        return total
    if strict:
        assert b == a - 1, f"reversed range {a}..{b} reached a checked path"
    total = 0
    for j in range(b + 1, a):
        total = total - f(j)
    return total


# -- characteristic polynomial -------------------------------------------------


@dataclass(frozen=True)
class CharPoly:
    """``sum_{s=0}^{n+1} signed[s] * w^(n-s+1)``."""

    n: int
    signed: tuple[int, ...]
    poly: Poly

    def __call__(self, w) -> GaussianRational:
        return self.poly(w)

    def d_power(self, q: int) -> Poly:
        """``D^q`` applied to the polynomial."""
        p = self.poly
        for _ in range(q):
            p = p.D()
        return p


@lru_cache(maxsize=None)
def char_poly(n: int) -> CharPoly:
    if n < 0:
        raise ValueError("n must be nonnegative")
    signed = tuple(fibonomial(n + 1, s) * (-1) ** _ceil_half(n - s + 1) for s in range(n + 2))
    coeffs = [0] * (n + 2)
    for s, c in enumerate(signed):
        coeffs[n - s + 1] = c
    return CharPoly(n, signed, Poly(coeffs))


# -- A-functions -----------------------------------------------------------------


@dataclass(frozen=True)
class AFunctions:
    """``values[m] = D^m (1/P_n)`` for ``m = 0..r``, symbolic or at a point."""

    n: int
    r: int
    w: object
    values: tuple

    @property
    def symbolic(self) -> bool:
        return _is_symbolic(self.w)


def a_functions(n: int, r: int, w) -> AFunctions:
    return _a_functions(n, r, _weight(w))


@lru_cache(maxsize=4096)
def _a_functions(n: int, r: int, w) -> AFunctions:
    cp = char_poly(n)
    if _is_symbolic(w):
        dP = [RatFun(cp.d_power(q)) for q in range(r + 1)]
        one = RatFun(1)
    else:
        dP = [cp.d_power(q)(w) for q in range(r + 1)]
        if dP[0].is_zero():
            raise SingularWeight(f"singular weight: P_{n}({w}) = 0")
        one = GaussianRational(1)
    values = []
    for m in range(r + 1):
        # P * A(m) = delta_{m0} - sum_{j<m} C(m, j) A(j) D^{m-j} P
        rhs = one if m == 0 else 0 * one
        for j in range(m):
            rhs = rhs - comb(m, j) * values[j] * dP[m - j]
        values.append(rhs / dP[0])
    return AFunctions(n, r, w, tuple(values))


def classic_a(m: int) -> Rational:
    """A(m) at w = 1 from its own recursion."""
    return _classic_a(m)


@lru_cache(maxsize=None)
def _classic_a(m: int) -> Rational:
    total = Rational(-1 if m == 0 else 0)
    for j in range(m):
        total -= comb(m, j) * (2 ** (m - j) + 1) * _classic_a(j)
    return total


def bar_a(p: int) -> Rational:
    """A(p) at w = -1 from its own recursion."""
    return _bar_a(p)


@lru_cache(maxsize=None)
def _bar_a(p: int) -> Rational:
    total = Rational(1 if p == 0 else 0)
    for j in range(p):
        total += comb(p, j) * (2 ** (p - j) - 1) * _bar_a(j)
    return total


# -- closed forms ------------------------------------------------------------------


@dataclass(frozen=True)
class TailTerm:
    """``w^(k + w_exp) * poly(k) * G_{k+offset}^n``; ``poly`` is ascending in k."""

    offset: int
    w_exp: int
    poly: tuple


@dataclass(frozen=True)
class ClosedForm:
    """Head terms ``coeff * G_j^n`` plus tail terms (see :class:`TailTerm`).

    ``basis`` is ``"shifted"`` (tail on ``G_{k+1}^n .. G_{k+n+1}^n``) or, for
    ``n = 1`` only, ``"standard"`` (tail on ``G_k`` and ``G_{k+1}``).
    ``infinite`` marks a generating-function value, whose tail is empty.
    """

    n: int
    r: int
    w: object
    basis: str
    head: tuple  # ((j, coeff), ...)
    tail: tuple = ()  # (TailTerm, ...)
    extension: bool = False
    infinite: bool = False
    divergent: bool = False

    @property
    def symbolic(self) -> bool:
        return _is_symbolic(self.w)

    def head_dict(self) -> dict:
        return dict(self.head)

    def tail_dict(self) -> dict:
        return {t.offset: t for t in self.tail}


def _w_scalar(w):
    return RatFun.w() if _is_symbolic(w) else w


def _one(w):
    return RatFun(1) if _is_symbolic(w) else GaussianRational(1)


def _trim(coeffs) -> tuple:
    cs = list(coeffs)
    while cs and cs[-1].is_zero():
        cs.pop()
    return tuple(cs)


def _canonical_exp(basis: str, offset: int) -> int:
    if basis == "standard":
        return 2 - offset
    return offset


def closed_form(n: int, r: int, w, basis: str = "shifted") -> ClosedForm:
    """Closed form of ``S_k^n(w, r)`` valid for every ``k >= 0`` and all seeds."""
    if n < 1 or r < 0:
        raise ValueError("closed_form needs n >= 1 and r >= 0")
    cf = _closed_form_shifted(n, r, _weight(w))
    if basis == "standard":
        return rebase_tail(cf)
    if basis != "shifted":
        raise UnsupportedBasis(f"unknown basis {basis!r}")
    return cf


@lru_cache(maxsize=4096)
def _closed_form_shifted(n: int, r: int, w) -> ClosedForm:
    A = _a_functions(n, r, w).values
    c = char_poly(n).signed
    W = _w_scalar(w)
    zero = 0 * _one(w)

    # B[e] = sum_m C(r, m) A(m) e^(r-m): D^r of A_0 * w^e, divided by w^e
    B = [sum((comb(r, m) * e ** (r - m) * A[m] for m in range(r + 1)), zero) for e in range(n + 2)]

    head = []
    for j in range(n + 1):
        coeff = zero
        for s in range(j + 1, n + 2):
            e = j + n - s + 1
            coeff = coeff + c[s] * W**e * B[e]
        if not coeff.is_zero():
            head.append((j, coeff))

    tail = []
    for t in range(1, n + 2):
        poly = [zero] * (r + 1)
        for s in range(t, n + 2):
            u = t + n - s + 1  # exponent of w beyond w^k
            scale = c[s] * W ** (u - t)
            for m in range(r + 1):
                q = r - m
                am = comb(r, m) * A[m] * scale
                for i in range(q + 1):
                    poly[i] = poly[i] - comb(q, i) * u ** (q - i) * am
        poly = _trim(poly)
        if poly:
            tail.append(TailTerm(t, t, poly))
    return ClosedForm(n, r, w, "shifted", tuple(head), tuple(tail))


def closed_form_n1(r: int, w) -> ClosedForm:
    """The ``n = 1`` closed form built directly in the ``{G_k, G_{k+1}}`` basis.

    An independent construction from the Leibniz one: the tail polynomials
    come from expanding ``(k + 2)^m`` and ``(k + 1)^m`` against
    ``A(w; r - m)``.
    """
    w = _weight(w)
    A = _a_functions(1, r, w).values
    W = _w_scalar(w)
    zero = 0 * _one(w)
    g0 = zero
    g1 = zero
    for m in range(r + 1):
        g0 = g0 - comb(r, m) * (W - (1 if m == r else 0)) * A[m]
        g1 = g1 + comb(r, m) * W * A[m]
    tails = []
    for offset, shift in ((0, 2), (1, 1)):
        poly = [zero] * (r + 1)
        for m in range(r + 1):
            for i in range(m + 1):
                poly[i] = poly[i] - comb(r, m) * comb(m, i) * shift ** (m - i) * A[r - m]
        poly = _trim(poly)
        if poly:
            tails.append(TailTerm(offset, shift, poly))
    head = tuple((j, v) for j, v in ((0, g0), (1, g1)) if not v.is_zero())
    return ClosedForm(1, r, w, "standard", head, tuple(tails))


def _scale_poly(poly, factor) -> tuple:
    return _trim(a * factor for a in poly)


def _add_polys(p, q) -> tuple:
    n = max(len(p), len(q))
    zero = (p or q)[0] * 0
    return _trim(
        (p[i] if i < len(p) else zero) + (q[i] if i < len(q) else zero) for i in range(n)
    )


def canonicalize(cf: ClosedForm) -> ClosedForm:
    """Bring every tail term to the basis' canonical ``w`` exponent.

    Merges repeated offsets and drops zero terms, so that two closed forms of
    the same identity compare equal.
    """
    W = _w_scalar(cf.w)
    head: dict = {}
    for j, coeff in cf.head:
        head[j] = head[j] + coeff if j in head else coeff
    tails: dict = {}
    for term in cf.tail:
        target = _canonical_exp(cf.basis, term.offset)
        poly = _trim(term.poly)
        if not poly:
            continue
        delta = term.w_exp - target
        if delta:
            poly = _scale_poly(poly, W**delta)
        tails[term.offset] = _add_polys(tails[term.offset], poly) if term.offset in tails else poly
    return replace(
        cf,
        head=tuple(sorted((j, v) for j, v in head.items() if not v.is_zero())),
        tail=tuple(
            TailTerm(t, _canonical_exp(cf.basis, t), p) for t, p in sorted(tails.items()) if p
        ),
    )


def rebase_tail(cf: ClosedForm, basis: str = "standard") -> ClosedForm:
    """Change an ``n = 1`` form between the shifted and standard tail bases."""
    if cf.n != 1:
        raise UnsupportedBasis("only n = 1 closed forms have a standard basis")
    if basis not in ("standard", "shifted"):
        raise UnsupportedBasis(f"unknown basis {basis!r}")
    cf = canonicalize(cf)
    if cf.basis == basis or cf.infinite:
        return replace(cf, basis=basis) if cf.infinite else cf
    W = _w_scalar(cf.w)
    tails = cf.tail_dict()
    if basis == "standard":
        # w^{k+2} P2 G_{k+2} = w^{k+2} P2 G_k + w^{k+2} P2 G_{k+1}
        p1 = tails[1].poly if 1 in tails else ()
        p2 = tails[2].poly if 2 in tails else ()
        new = {0: (2, p2), 1: (1, _add_polys(p1, _scale_poly(p2, W)) if p2 else p1)}
    else:
        # G_k = G_{k+2} - G_{k+1}
        q0 = tails[0].poly if 0 in tails else ()
        q1 = tails[1].poly if 1 in tails else ()
        new = {2: (2, q0), 1: (1, _add_polys(q1, _scale_poly(q0, -W)) if q0 else q1)}
    tail = tuple(TailTerm(t, e, p) for t, (e, p) in sorted(new.items()) if p)
    return replace(cf, basis=basis, tail=tail)


def specialize(cf: ClosedForm, w) -> ClosedForm:
    """Evaluate the coefficients of a symbolic closed form at a numeric ``w``."""
    if not cf.symbolic:
        raise ValueError("closed form is already numeric")
    w = as_gauss(w)
    head = tuple((j, c(w)) for j, c in cf.head)
    tail = tuple(TailTerm(t.offset, t.w_exp, tuple(c(w) for c in t.poly)) for t in cf.tail)
    return canonicalize(replace(cf, w=w, head=head, tail=tail))


def _poly_at(poly, x):
    acc = 0
    for c in reversed(poly):
        acc = acc * x + c
    return acc


def _is_real_form(cf: ClosedForm) -> bool:
    return (
        cf.w.is_real()
        and all(c.is_real() for _, c in cf.head)
        and all(c.is_real() for t in cf.tail for c in t.poly)
    )


def evaluate_closed(cf: ClosedForm, k: int, seeds: Seeds) -> GaussianRational:
    """Value of a numeric closed form at upper limit ``k``.

    ``G_{k+t}`` comes from one fast-doubling call, so the cost is
    O(log k) big-number multiplications plus the polynomial work.
    """
    if cf.symbolic:
        raise ValueError("evaluate_closed needs a numeric closed form; see specialize()")
    if k < 0:
        raise ValueError("k must be nonnegative")
    if _is_real_form(cf):
        # same arithmetic on the real parts without the Q(i) wrappers
        head = tuple((j, c.re) for j, c in cf.head)
        tail = tuple((t.offset, t.w_exp, tuple(c.re for c in t.poly)) for t in cf.tail)
        return GaussianRational(_evaluate(cf.n, cf.w.re, head, tail, cf.infinite, k, seeds))
    tail = tuple((t.offset, t.w_exp, t.poly) for t in cf.tail)
    return as_gauss(_evaluate(cf.n, cf.w, cf.head, tail, cf.infinite, k, seeds))


def _evaluate(n, w, head, tail, infinite, k, seeds):
    g0, g1 = seeds.g0, seeds.g1
    total = 0
    for j, coeff in head:
        total = total + coeff * (fib(j - 1) * g0 + fib(j) * g1) ** n
    if infinite or not tail:
        return total
    offsets = [t[0] for t in tail]
    lo, hi = min(offsets), max(offsets)
    fa, fb = fib_pair(k + lo - 1)  # F_{k+lo-1}, F_{k+lo}
    G = {}
    for t in range(lo, hi + 1):
        G[t] = fa * g0 + fb * g1
        fa, fb = fb, fa + fb
    wk = w**k
    for offset, w_exp, poly in tail:
        p = _poly_at(poly, k)
        if p:
            total = total + wk * w**w_exp * p * G[offset] ** n
    return total


# -- infinite sums ---------------------------------------------------------------


def converges(w, n: int) -> bool:
    """Whether ``w^k G_k^n -> 0`` for generic seeds, i.e. ``|w|^2 phi^(2n) < 1``.

    ``phi^(2n) = (L_{2n} + F_{2n} sqrt 5)/2``; the comparison is exact.  The
    boundary case is reported as divergent.
    """
    norm = as_gauss(w).norm()
    lucas = fib(2 * n - 1) + fib(2 * n + 1)
    return surd_sign(QuadraticSurd(1 - norm * lucas / 2, -norm * fib(2 * n) / 2)) > 0


def generating_function(n: int, r: int, w, *, analytic: bool = False) -> ClosedForm:
    """``S_infinity^n(w, r)``: the head of the closed form with the tail dropped.

    ``n >= 2`` with ``r >= 1`` is not covered by a published formula and is
    flagged as an extension.  A numeric divergent weight raises
    :class:`Divergent` unless ``analytic`` is set, in which case the value is
    returned with ``divergent=True``.
    """
    w = _weight(w)
    cf = _closed_form_shifted(n, r, w)
    divergent = False
    if not _is_symbolic(w) and not converges(w, n):
        if not analytic:
            raise Divergent(f"divergent weight: |w| phi^{n} >= 1 at w = {w}")
        divergent = True
    return replace(cf, tail=(), infinite=True, extension=(n >= 2 and r >= 1), divergent=divergent)


# -- alternating split at w = i ----------------------------------------------------


@dataclass(frozen=True)
class SplitPart:
    """``sum head_j G_j^n + (-1)^K sum_t P_t(K) G_{2K+t}^n`` with rational coefficients."""

    head: tuple  # ((j, Rational), ...)
    tail: tuple  # ((t, (c0, c1, ...)), ...) ascending in K


@dataclass(frozen=True)
class EvenOddSplit:
    """``even`` is ``sum_{j=0}^K (-1)^j j^r G_{2j}^n``; ``odd`` is
    ``sum_{j=1}^K (-1)^(j-1) (2j-1)^r G_{2j-1}^n``."""

    n: int
    r: int
    even: SplitPart
    odd: SplitPart


def split_alternating(n: int, r: int) -> EvenOddSplit:
    cf = _closed_form_shifted(n, r, I)
    # tail term: i^(2K+e) P(2K) G = (-1)^K * i^e P(2K) G
    tails: dict[int, tuple] = {}
    for term in cf.tail:
        ie = I**term.w_exp
        poly = tuple(ie * c * 2**d for d, c in enumerate(term.poly))
        if n == 1:
            # G_{2K+t} = F_{t-1} G_{2K} + F_t G_{2K+1}
            for base, f in ((0, fib(term.offset - 1)), (1, fib(term.offset))):
                if f:
                    part = _scale_poly(poly, f)
                    tails[base] = _add_polys(tails[base], part) if base in tails else part
        else:
            tails[term.offset] = poly
    scale = Rational(1, 2**r)

    def part(pick: Callable[[GaussianRational], Rational]) -> SplitPart:
        head = tuple((j, pick(c)) for j, c in cf.head if pick(c))
        tail = []
        for t, poly in sorted(tails.items()):
            cs = [pick(c) for c in poly]
            while cs and not cs[-1]:
                cs.pop()
            if cs:
                tail.append((t, tuple(cs)))
        return SplitPart(head, tuple(tail))

    even = part(lambda z: z.re * scale)
    odd = part(lambda z: z.im)
    return EvenOddSplit(n, r, even, odd)


def evaluate_split_part(part: SplitPart, n: int, K: int, seeds: Seeds) -> Rational:
    total = Rational(0)
    for j, c in part.head:
        total += c * seeds[j] ** n
    sign = -1 if K % 2 else 1
    for t, poly in part.tail:
        total += sign * _poly_at(poly, K) * seeds[2 * K + t] ** n
    return total
