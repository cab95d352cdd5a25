"""The golden identity corpus: published evaluations stored as JSON fixtures.

Each entry is regenerated through the engine, both sides are canonicalized,
and any mismatch is reported as a per-term diff.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from importlib import resources
from math import comb

from .engine import (
    ClosedForm,
    SplitPart,
    canonicalize,
    closed_form,
    generating_function,
    split_alternating,
)
from .exact import Rational, format_gauss
from .render import _coeff_str, closed_form_from_json, _part_from_json

__all__ = ["GoldenEntry", "GoldenResult", "load_corpus", "check_entry", "run_corpus"]


@dataclass(frozen=True)
class GoldenEntry:
    id: str
    kind: str  # closed | genfunc | split
    params: dict
    expected: dict
    source: str = ""


@dataclass
class GoldenResult:
    id: str
    ok: bool
    diff: list = field(default_factory=list)
    error: str | None = None

    def to_json(self) -> dict:
        out = {"id": self.id, "status": "pass" if self.ok else "fail"}
        if self.diff:
            out["diff"] = self.diff
        if self.error:
            out["error"] = self.error
        return out


def load_corpus(path=None) -> list[GoldenEntry]:
    if path is None:
        text = resources.files("gfsums").joinpath("data/golden.json").read_text(encoding="utf-8")
    else:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    data = json.loads(text)
    return [
        GoldenEntry(e["id"], e["kind"], e["params"], e["expected"], e.get("source", ""))
        for e in data["entries"]
    ]


# -- splits -------------------------------------------------------------------


def _combine(parts, weights) -> SplitPart:
    head: dict = {}
    tail: dict = {}
    for part, wt in zip(parts, weights):
        for j, c in part.head:
            head[j] = head.get(j, 0) + wt * c
        for t, poly in part.tail:
            acc = list(tail.get(t, ()))
            acc += [Rational(0)] * (len(poly) - len(acc))
            for d, c in enumerate(poly):
                acc[d] += wt * c
            tail[t] = acc
    return _canonical_part(SplitPart(tuple(head.items()), tuple(tail.items())))


def _canonical_part(part: SplitPart) -> SplitPart:
    head = tuple(sorted((j, Rational(c)) for j, c in part.head if c))
    tail = []
    for t, poly in sorted(part.tail):
        cs = [Rational(c) for c in poly]
        while cs and not cs[-1]:
            cs.pop()
        if cs:
            tail.append((t, tuple(cs)))
    return SplitPart(head, tuple(tail))


def split_part(n: int, r: int, mode: str) -> SplitPart:
    """``even``/``odd`` as in :func:`split_alternating`; ``odd_j`` weights the odd terms by ``j^r``.

    Since ``j^r = ((2j-1) + 1)^r / 2^r``, the ``odd_j`` sum is
    ``sum_i C(r, i) odd_i / 2^r`` over the odd parts for ``r' = 0..r``.
    """
    if mode == "even":
        return _canonical_part(split_alternating(n, r).even)
    if mode == "odd":
        return _canonical_part(split_alternating(n, r).odd)
    if mode == "odd_j":
        parts = [split_alternating(n, i).odd for i in range(r + 1)]
        return _combine(parts, [Rational(comb(r, i), 2**r) for i in range(r + 1)])
    raise ValueError(f"unknown split part {mode!r}")


# -- comparison -------------------------------------------------------------------


def _cf_terms(cf: ClosedForm) -> dict:
    sym = cf.symbolic
    out = {f"head[{j}]": _coeff_str(c, sym) for j, c in cf.head}
    for t in cf.tail:
        for d, c in enumerate(t.poly):
            if not c.is_zero():
                out[f"tail[{t.offset}].k^{d}"] = _coeff_str(c, sym)
    return out


def _part_terms(part: SplitPart) -> dict:
    out = {f"head[{j}]": format_gauss(c) for j, c in part.head}
    for t, poly in part.tail:
        for d, c in enumerate(poly):
            if c:
                out[f"tail[{t}].K^{d}"] = format_gauss(c)
    return out


def _diff(expected: dict, actual: dict) -> list:
    keys = sorted(set(expected) | set(actual))
    return [
        {"term": key, "expected": expected.get(key, "0"), "actual": actual.get(key, "0")}
        for key in keys
        if expected.get(key, "0") != actual.get(key, "0")
    ]


def check_entry(entry: GoldenEntry) -> GoldenResult:
    p = entry.params
    try:
        if entry.kind == "split":
            want = _canonical_part(_part_from_json(entry.expected))
            got = split_part(p["n"], p["r"], p["part"])
            return GoldenResult(entry.id, want == got, _diff(_part_terms(want), _part_terms(got)))
        want = canonicalize(closed_form_from_json(entry.expected))
        if entry.kind == "closed":
            got = canonicalize(closed_form(p["n"], p["r"], want.w, p.get("basis", "shifted")))
        elif entry.kind == "genfunc":
            got = canonicalize(generating_function(p["n"], p["r"], want.w))
        else:
            raise ValueError(f"unknown entry kind {entry.kind!r}")
    except (ArithmeticError, ValueError, KeyError) as exc:
        return GoldenResult(entry.id, False, error=f"{type(exc).__name__}: {exc}")
    diff = _diff(_cf_terms(want), _cf_terms(got))
    ok = want.head == got.head and want.tail == got.tail and want.infinite == got.infinite
    return GoldenResult(entry.id, ok, diff)


def run_corpus(entries=None, only=None) -> list[GoldenResult]:
    entries = load_corpus() if entries is None else entries
    if only is not None:
        entries = [e for e in entries if e.id == only]
    return [check_entry(e) for e in entries]
