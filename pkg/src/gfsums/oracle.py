"""Independent ground truth for the closed forms.

``brute_sum`` and the other direct sums here only use :mod:`gfsums.fib` and
:mod:`gfsums.exact`; the closed-form engine is imported lazily inside
:func:`run_sweep` so that the oracle stays independent of what it checks.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field

from typing import Callable, Iterator, Optional, Sequence

from .exact import GaussianRational, Rational, as_gauss, format_gauss
from .fib import Seeds, fibonomial

__all__ = [
    "brute_sum",
    "brute_partial_sums",
    "brute_even",
    "brute_odd",
    "knuth_identity_residual",
    "SweepConfig",
    "CaseResult",
    "VerificationReport",
    "default_config",
    "run_sweep",
]


def brute_partial_sums(n: int, r: int, w, k: int, seeds: Seeds) -> Iterator[GaussianRational]:
    """Yield ``S_0, S_1, ..., S_k`` by direct summation (``0^0 = 1``)."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    w = as_gauss(w)
    real = w.is_real()
    g_prev, g = seeds.g1 - seeds.g0, seeds.g0  # G_{-1}, G_0
    step = w.re if real else w
    wp = Rational(1) if real else GaussianRational(1)
    acc = Rational(0) if real else GaussianRational(0)
    for j in range(k + 1):
        acc = acc + wp * j**r * g**n
        yield GaussianRational(acc) if real else acc
        g_prev, g = g, g + g_prev
        wp = wp * step


def brute_sum(n: int, r: int, w, k: int, seeds: Seeds) -> GaussianRational:
    """``sum_{j=0}^k w^j j^r G_j^n`` summed term by term."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    w = as_gauss(w)
    if w.is_real():
        # integer numerators over a common denominator keep the loop cheap
        p, q = w.re.numerator, w.re.denominator
        den = seeds.g0.denominator * seeds.g1.denominator
        a, b = int(seeds.g0 * den), int(seeds.g1 * den)
        g_prev, g = b - a, a
        acc, pj = 0, 1
        for j in range(k + 1):
            acc = acc * q + pj * j**r * g**n
            g_prev, g = g, g + g_prev
            pj *= p
        return GaussianRational(Rational(acc, q**k * den**n))
    *_, last = brute_partial_sums(n, r, w, k, seeds)
    return last


def brute_even(n: int, r: int, K: int, seeds: Seeds) -> Rational:
    """``sum_{j=0}^K (-1)^j j^r G_{2j}^n``."""
    return sum(((-1) ** j * j**r * seeds[2 * j] ** n for j in range(K + 1)), Rational(0))


def brute_odd(n: int, r: int, K: int, seeds: Seeds) -> Rational:
    """``sum_{j=1}^K (-1)^(j-1) (2j-1)^r G_{2j-1}^n``."""
    return sum(
        ((-1) ** (j - 1) * (2 * j - 1) ** r * seeds[2 * j - 1] ** n for j in range(1, K + 1)),
        Rational(0),
    )


def knuth_identity_residual(n: int, j: int, seeds: Seeds) -> Rational:
    """Left side of ``sum_s C(n+1,s)_F (-1)^ceil((n-s+1)/2) G_{j+s}^n = 0``."""
    total = Rational(0)
    for s in range(n + 2):
        sign = (-1) ** (-((s - n - 1) // 2))
        total += fibonomial(n + 1, s) * sign * seeds[j + s] ** n
    return total


# -- sweeps ----------------------------------------------------------------------


@dataclass(frozen=True)
class SweepConfig:
    n_max: int = 4
    r_max: int = 4
    k_max: int = 25
    w_grid: tuple = ()
    seed_grid: tuple = ()
    trials: int = 2
    rng_seed: int = 0
    n_min: int = 1

    def all_seeds(self) -> list[Seeds]:
        """The explicit seed grid followed by ``trials`` random rational pairs."""
        rng = random.Random(self.rng_seed)
        extra = []
        for _ in range(self.trials):
            extra.append(
                Seeds(
                    Rational(rng.randint(-9, 9), rng.randint(1, 9)),
                    Rational(rng.randint(-9, 9), rng.randint(1, 9)),
                )
            )
        seen, out = set(), []
        for s in list(self.seed_grid) + extra:
            if s not in seen:
                seen.add(s)
                out.append(s)
        return out


DEFAULT_W_GRID = ("0", "1", "-1", "2", "1/2", "-1/2", "3", "2/3", "1/16", "i", "-i")


def default_config(
    n_max: int = 4,
    r_max: int = 4,
    k_max: int = 25,
    w_grid: Optional[Sequence] = None,
    trials: int = 2,
    rng_seed: int = 0,
) -> SweepConfig:
    """Sweep over the weight grid with the full ``{0..n_max}^2`` seed grid plus Lucas."""
    grid = [Seeds(a, b) for a in range(n_max + 1) for b in range(n_max + 1)]
    grid.append(Seeds(2, 1))
    ws = tuple(as_gauss(x) for x in (w_grid if w_grid is not None else DEFAULT_W_GRID))
    return SweepConfig(n_max, r_max, k_max, ws, tuple(grid), trials, rng_seed)


@dataclass(frozen=True)
class CaseResult:
    """One ``(n, r, w, seeds)`` slice checked for every ``k`` in ``0..k_max``."""

    n: int
    r: int
    w: GaussianRational
    seeds: Seeds
    status: str  # pass | fail | skipped_singular | skipped_divergent
    k: Optional[int] = None  # first failing k
    closed: Optional[GaussianRational] = None
    brute: Optional[GaussianRational] = None

    def key(self) -> tuple:
        w = as_gauss(self.w)
        return (self.n, self.r, w.re, w.im, self.seeds.g0, self.seeds.g1)

    def to_json(self) -> dict:
        d = {
            "n": self.n,
            "r": self.r,
            "w": format_gauss(self.w),
            "seeds": str(self.seeds),
            "status": self.status,
        }
        if self.status == "fail":
            d["counterexample"] = {
                "k": self.k,
                "closed_form": format_gauss(self.closed),
                "brute_force": format_gauss(self.brute),
            }
        return d


@dataclass
class VerificationReport:
    cases: list = field(default_factory=list)

    def count(self, status: str) -> int:
        return sum(1 for c in self.cases if c.status == status)

    @property
    def failures(self) -> list:
        return [c for c in self.cases if c.status == "fail"]

    @property
    def ok(self) -> bool:
        return not self.failures

    def summary(self) -> dict:
        return {
            "pass": self.count("pass"),
            "fail": self.count("fail"),
            "skipped": self.count("skipped_singular") + self.count("skipped_divergent"),
        }

    def to_json(self) -> dict:
        return {"summary": self.summary(), "cases": [c.to_json() for c in self.cases]}

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=1, sort_keys=True)


def _check_slice(n, r, w, seeds, k_max, synthesize, evaluate) -> CaseResult:
    from .errors import SingularWeight

    try:
        cf = synthesize(n, r, w)
    except SingularWeight:
        return CaseResult(n, r, w, seeds, "skipped_singular")
    for k, expected in enumerate(brute_partial_sums(n, r, w, k_max, seeds)):
        got = evaluate(cf, k, seeds)
        if got != expected:
            return CaseResult(n, r, w, seeds, "fail", k, got, expected)
    return CaseResult(n, r, w, seeds, "pass")


def run_sweep(
    config: SweepConfig,
    synthesize: Optional[Callable] = None,
    evaluate: Optional[Callable] = None,
) -> VerificationReport:
    """Compare closed forms against direct summation for every configured case.

    ``synthesize(n, r, w)`` and ``evaluate(cf, k, seeds)`` default to the
    engine; tests substitute a corrupted ``synthesize`` to check that faults
    are reported.  Failures never stop the sweep.  Cases are sorted by key, so
    the report does not depend on evaluation order.
    """
    from . import engine

    synthesize = synthesize or engine.closed_form
    evaluate = evaluate or engine.evaluate_closed
    cases = []
    for n in range(config.n_min, config.n_max + 1):
        for r in range(config.r_max + 1):
            for w in config.w_grid:
                for seeds in config.all_seeds():
                    cases.append(
                        _check_slice(n, r, as_gauss(w), seeds, config.k_max, synthesize, evaluate)
                    )
    cases.sort(key=CaseResult.key)
    return VerificationReport(cases)
