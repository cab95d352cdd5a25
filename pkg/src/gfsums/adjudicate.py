"""Literal evaluation of the printed general-n theorem, term by term.

The printed statement has the shape ``S = T1 + T2 + T3 + T4`` with

* ``T1 = A_n(w; r) G_0^n``
* ``T2 = sum_m C(r,m) A_n(w;m) sum_{j=1}^n j^(r-m) w^j G_j^n``
* ``T3 = sum_m C(r,m) A_n(w;m) sum_{s=0}^n c_s sum_{j=0}^{s-1} (j+n-s+1)^(r-m) w^(j+n-s+1) G_j^n``
* ``T4 = sum_m C(r,m) A_n(w;m) sum_{s=0}^{n+1} c_s sum_{j=k+1}^{k+s} (j+n-s+1)^(r-m) w^(j+n-s+1) G_j^n``

:func:`adjudicate` evaluates these literally and compares ``T1+T2+T3+T4``
and ``T1+T2+T3-T4`` with direct summation and with the Leibniz closed form.
``T1 + T2`` is exactly the ``s = n+1`` slice that the range of ``T3`` leaves
out, so the first three terms together are the full head; the boundary
term enters with a minus sign.  See ``docs/main_theorem_adjudication.md``.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from math import comb

from .engine import a_functions, char_poly, closed_form, evaluate_closed, span_sum
from .exact import GaussianRational, as_gauss, format_gauss
from .fib import FIBONACCI, LUCAS, Seeds
from .oracle import brute_sum

__all__ = ["printed_terms", "AdjudicationRow", "adjudicate", "render_markdown"]

DEFAULT_CASES = ((1, 0, "1"), (2, 1, "1/2"))


def printed_terms(n: int, r: int, w, k: int, seeds: Seeds) -> tuple:
    """``(T1, T2, T3, T4)`` of the printed statement at one point."""
    w = as_gauss(w)
    A = a_functions(n, r, w).values
    c = char_poly(n).signed
    G = lambda j: seeds[j] ** n  # noqa: E731

    t1 = A[r] * G(0)
    t2 = GaussianRational(0)
    t3 = GaussianRational(0)
    t4 = GaussianRational(0)
    for m in range(r + 1):
        q = r - m
        am = comb(r, m) * A[m]
        t2 = t2 + am * span_sum(1, n, lambda j: j**q * w**j * G(j), strict=True)
        for s in range(n + 2):
            e0 = n - s + 1
            term = lambda j: (j + e0) ** q * w ** (j + e0) * G(j)  # noqa: E731
            if s <= n:
                t3 = t3 + am * c[s] * span_sum(0, s - 1, term, strict=True)
            t4 = t4 + am * c[s] * span_sum(k + 1, k + s, term, strict=True)
    return as_gauss(t1), as_gauss(t2), as_gauss(t3), as_gauss(t4)


@dataclass(frozen=True)
class AdjudicationRow:
    n: int
    r: int
    w: GaussianRational
    k: int
    seeds: Seeds
    brute: GaussianRational
    leibniz: GaussianRational
    printed: GaussianRational  # T1 + T2 + T3 + T4
    corrected: GaussianRational  # T1 + T2 + T3 - T4
    head_matches: bool  # T1 + T2 + T3 equals the Leibniz head at these seeds

    @property
    def printed_ok(self) -> bool:
        return self.printed == self.brute

    @property
    def corrected_ok(self) -> bool:
        return self.corrected == self.brute

    @property
    def leibniz_ok(self) -> bool:
        return self.leibniz == self.brute


def adjudicate(cases=DEFAULT_CASES, ks=range(0, 9), seed_list=(FIBONACCI, LUCAS, Seeds(3, -2))):
    rows = []
    for n, r, w in cases:
        w = as_gauss(w)
        cf = closed_form(n, r, w)
        head_only = replace(cf, tail=(), infinite=True)
        for seeds in seed_list:
            head_value = evaluate_closed(head_only, 0, seeds)
            for k in ks:
                t1, t2, t3, t4 = printed_terms(n, r, w, k, seeds)
                rows.append(
                    AdjudicationRow(
                        n,
                        r,
                        w,
                        k,
                        seeds,
                        brute=brute_sum(n, r, w, k, seeds),
                        leibniz=evaluate_closed(cf, k, seeds),
                        printed=t1 + t2 + t3 + t4,
                        corrected=t1 + t2 + t3 - t4,
                        head_matches=(t1 + t2 + t3 == head_value),
                    )
                )
    return rows


def render_markdown(rows) -> str:
    lines = [
        "| n | r | w | seeds | k | brute force | Leibniz | printed (T1+T2+T3+T4) | T1+T2+T3-T4 |",
        "|---|---|---|---|---|---|---|---|---|",
    ]
    for row in rows:
        lines.append(
            f"| {row.n} | {row.r} | {format_gauss(row.w)} | {row.seeds} | {row.k} "
            f"| {format_gauss(row.brute)} | {format_gauss(row.leibniz)} "
            f"| {format_gauss(row.printed)} | {format_gauss(row.corrected)} |"
        )
    return "\n".join(lines)
