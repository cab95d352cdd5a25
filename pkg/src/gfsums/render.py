"""JSON, plain-text and LaTeX renderings of closed forms and alternating splits.

JSON is the stable contract: scalars use the ``p/q`` and ``a/b+c/d*i`` text
forms, symbolic coefficients are rational-function expressions in ``w``.
"""

from __future__ import annotations

import json

from .engine import SYMBOLIC, ClosedForm, EvenOddSplit, SplitPart, TailTerm
from .exact import GaussianRational, Rational, format_gauss, format_rational, parse_gauss, parse_rational
from .poly import Poly, RatFun, format_poly, format_ratfun, parse_ratfun

__all__ = [
    "closed_form_to_json",
    "closed_form_from_json",
    "split_to_json",
    "split_from_json",
    "dumps",
    "render_text",
    "render_latex",
    "render_split_text",
    "render_split_latex",
]


def _coeff_str(c, symbolic: bool) -> str:
    return format_ratfun(c) if symbolic else format_gauss(c)


def _coeff_parse(text: str, symbolic: bool):
    return parse_ratfun(text) if symbolic else parse_gauss(text)


def closed_form_to_json(cf: ClosedForm) -> dict:
    sym = cf.symbolic
    return {
        "n": cf.n,
        "r": cf.r,
        "w": SYMBOLIC if sym else format_gauss(cf.w),
        "basis": cf.basis,
        "head": [{"j": j, "coeff": _coeff_str(c, sym)} for j, c in cf.head],
        "tail": [
            {
                "offset": t.offset,
                "w_exp_offset": t.w_exp,
                "poly_k": [_coeff_str(c, sym) for c in t.poly],
            }
            for t in cf.tail
        ],
        "meta": {
            "singular": False,
            "extension": cf.extension,
            "infinite": cf.infinite,
            "divergent": cf.divergent,
        },
    }


def closed_form_from_json(data: dict) -> ClosedForm:
    sym = data["w"] == SYMBOLIC
    w = SYMBOLIC if sym else parse_gauss(data["w"])
    meta = data.get("meta", {})
    return ClosedForm(
        n=int(data["n"]),
        r=int(data["r"]),
        w=w,
        basis=data.get("basis", "shifted"),
        head=tuple((int(h["j"]), _coeff_parse(h["coeff"], sym)) for h in data["head"]),
        tail=tuple(
            TailTerm(
                int(t["offset"]),
                int(t["w_exp_offset"]),
                tuple(_coeff_parse(c, sym) for c in t["poly_k"]),
            )
            for t in data.get("tail", [])
        ),
        extension=bool(meta.get("extension", False)),
        infinite=bool(meta.get("infinite", False)),
        divergent=bool(meta.get("divergent", False)),
    )


def _part_to_json(part: SplitPart) -> dict:
    return {
        "head": [{"j": j, "coeff": format_rational(c)} for j, c in part.head],
        "tail": [{"offset": t, "poly_K": [format_rational(c) for c in poly]} for t, poly in part.tail],
    }


def _part_from_json(data: dict) -> SplitPart:
    return SplitPart(
        tuple((int(h["j"]), parse_rational(h["coeff"])) for h in data["head"]),
        tuple((int(t["offset"]), tuple(parse_rational(c) for c in t["poly_K"])) for t in data["tail"]),
    )


def split_to_json(split: EvenOddSplit) -> dict:
    """Tail entries mean ``(-1)^K * poly_K(K) * G_{2K+offset}^n``."""
    return {
        "n": split.n,
        "r": split.r,
        "even": _part_to_json(split.even),
        "odd": _part_to_json(split.odd),
    }


def split_from_json(data: dict) -> EvenOddSplit:
    return EvenOddSplit(
        int(data["n"]), int(data["r"]), _part_from_json(data["even"]), _part_from_json(data["odd"])
    )


def dumps(obj) -> str:
    """Canonical JSON text (sorted keys, two-space indent, trailing newline)."""
    if isinstance(obj, ClosedForm):
        obj = closed_form_to_json(obj)
    elif isinstance(obj, EvenOddSplit):
        obj = split_to_json(obj)
    return json.dumps(obj, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


# -- text ------------------------------------------------------------------------


def _g(index: str, n: int) -> str:
    plain = index.isdigit() or index.isalpha() or index.startswith("(")
    base = f"G{index}" if plain else f"G({index})"
    return base if n == 1 else f"{base}^{n}"


def _k_index(t: int, var: str = "k") -> str:
    return var if t == 0 else f"{var}{t:+d}"


def _content(p: Poly):
    """Split a real polynomial as ``c * q`` with ``q`` primitive over the integers."""
    from math import gcd, lcm

    cs = [c.re for c in p.coeffs if not c.is_zero()]
    den = lcm(*(int(c.denominator) for c in cs))
    num = gcd(*(int(c * den) for c in cs))
    c = Rational(num, den)
    return c, Poly([x / c for x in p.coeffs])


def _nterms(p: Poly) -> int:
    return sum(1 for c in p.coeffs if not c.is_zero())


def _join(terms: list[tuple[bool, str]]) -> str:
    if not terms:
        return "0"
    out = []
    for idx, (neg, body) in enumerate(terms):
        if idx == 0:
            out.append(("-" if neg else "") + body)
        else:
            out.append((" - " if neg else " + ") + body)
    return "".join(out)


def _scalar_term(c, sym: bool):
    """(negative?, magnitude text, magnitude is one?) for a head coefficient."""
    if sym:
        return False, f"[{format_ratfun(c)}]", False
    if c.is_real():
        neg = c.re < 0
        mag = -c if neg else c
        return neg, format_gauss(mag), mag == 1
    return False, f"({format_gauss(c)})", False


def _wpow(w, e: int, var: str = "k") -> str:
    exp = var if e == 0 else f"{var}{e:+d}"
    if isinstance(w, str):
        return f"w^({exp})"
    txt = format_gauss(w)
    if w.is_real() and w.re >= 0 and w.re.denominator == 1:
        return f"{txt}^({exp})"
    return f"({txt})^({exp})"


def render_text(cf: ClosedForm) -> str:
    """One-line human-readable identity, e.g. ``-5·G0 - 8·G1 + (k^2 - 2*k + 5)·Gk + ...``."""
    sym = cf.symbolic
    terms = []
    for j, c in cf.head:
        neg, mag, one = _scalar_term(c, sym)
        g = _g(str(j), cf.n)
        terms.append((neg, g if one else f"{mag}·{g}"))
    for t in cf.tail:
        g = _g(_k_index(t.offset), cf.n)
        if sym:
            poly_txt = " + ".join(
                f"[{format_ratfun(c)}]" + ("" if d == 0 else ("·k" if d == 1 else f"·k^{d}"))
                for d, c in enumerate(t.poly)
                if not c.is_zero()
            )
            neg = False
            body = f"({poly_txt})"
        else:
            p = Poly(t.poly)
            neg = p.is_real() and p.lead().re < 0
            if neg:
                p = -p
            content = Rational(1)
            if p.is_real():
                content, p = _content(p)
            body = format_poly(p, "k")
            if _nterms(p) > 1 and not body.startswith("("):
                body = f"({body})"
            elif body == "1":
                body = ""
        wpow = "" if (not sym and cf.w == 1) else _wpow(cf.w, t.w_exp)
        if not sym and content != 1:
            if content.numerator != 1:
                wpow = f"{content.numerator}·{wpow}" if wpow else str(content.numerator)
            if content.denominator != 1:
                wpow = f"{wpow or 1}/{content.denominator}"
        factor = f"{wpow}·" if wpow else ""
        pieces = factor + (f"{body}·" if body else "") + g
        terms.append((neg, pieces))
    lhs = _text_lhs(cf)
    return f"{lhs} = {_join(terms)}"


def _text_lhs(cf: ClosedForm) -> str:
    upper = "inf" if cf.infinite else "k"
    parts = []
    if cf.symbolic or cf.w != 1:
        parts.append(_wpow(cf.w, 0, "j").replace("^(j)", "^j"))
    if cf.r:
        parts.append("j" if cf.r == 1 else f"j^{cf.r}")
    parts.append(_g("j", cf.n))
    return f"sum_{{j=0}}^{{{upper}}} " + "·".join(parts)


def render_split_text(split: EvenOddSplit) -> str:
    lines = []
    n, r = split.n, split.r
    jr = "" if r == 0 else ("j·" if r == 1 else f"j^{r}·")
    oddr = "" if r == 0 else ("(2j-1)·" if r == 1 else f"(2j-1)^{r}·")
    for part, lhs in (
        (split.even, f"sum_{{j=0}}^{{K}} (-1)^j·{jr}{_g('(2j)', n)}"),
        (split.odd, f"sum_{{j=1}}^{{K}} (-1)^(j-1)·{oddr}{_g('(2j-1)', n)}"),
    ):
        lines.append(f"{lhs} = {_part_text(part, n)}")
    return "\n".join(lines)


def _part_text(part: SplitPart, n: int) -> str:
    terms = []
    for j, c in part.head:
        neg = c < 0
        mag = -c if neg else c
        g = _g(str(j), n)
        terms.append((neg, g if mag == 1 else f"{format_rational(mag)}·{g}"))
    for t, poly in part.tail:
        p = Poly(poly)
        neg = p.lead().re < 0
        if neg:
            p = -p
        body = format_poly(p, "K")
        if _nterms(p) > 1:
            body = f"({body})"
        g = _g(f"2K{t:+d}" if t else "2K", n)
        g = g.replace("G2K", "G(2K)") if t == 0 else g
        terms.append((neg, "(-1)^K·" + ("" if body == "1" else f"{body}·") + g))
    return _join(terms)


# -- LaTeX -------------------------------------------------------------------------


def _tex_rat(x) -> str:
    x = Rational(x)
    if x.denominator == 1:
        return str(x.numerator)
    return rf"\frac{{{x.numerator}}}{{{x.denominator}}}"


def _tex_scalar(c: GaussianRational) -> str:
    if c.is_real():
        return _tex_rat(c.re)
    re = "" if not c.re else _tex_rat(c.re)
    im = _tex_rat(abs(c.im))
    sign = "-" if c.im < 0 else ("+" if re else "")
    return rf"\left({re}{sign}{'' if im == '1' else im}i\right)"


def _tex_poly(p: Poly, var: str) -> str:
    out = []
    for e in range(p.degree, -1, -1):
        c = p.coeffs[e]
        if c.is_zero():
            continue
        neg = c.is_real() and c.re < 0
        mag = -c if neg else c
        mono = "" if e == 0 else (var if e == 1 else f"{var}^{{{e}}}")
        coef = _tex_scalar(mag)
        body = coef if not mono else (mono if mag == 1 else coef + mono)
        out.append((neg, body))
    return _join(out) if out else "0"


def _tex_ratfun(f: RatFun) -> str:
    num = _tex_poly(f.num, "w")
    if f.is_poly():
        return num
    return rf"\frac{{{num}}}{{{_tex_poly(f.den, 'w')}}}"


def _tex_g(index: str, n: int) -> str:
    return f"G_{{{index}}}" + ("" if n == 1 else f"^{{{n}}}")


def render_latex(cf: ClosedForm) -> str:
    sym = cf.symbolic
    terms = []
    for j, c in cf.head:
        if sym:
            terms.append((False, rf"{_tex_ratfun(c)}\,{_tex_g(str(j), cf.n)}"))
            continue
        neg = c.is_real() and c.re < 0
        mag = -c if neg else c
        coef = "" if mag == 1 else _tex_scalar(mag)
        terms.append((neg, coef + _tex_g(str(j), cf.n)))
    for t in cf.tail:
        idx = "k" if t.offset == 0 else f"k + {t.offset}"
        exp = "k" if t.w_exp == 0 else f"k {'+' if t.w_exp > 0 else '-'} {abs(t.w_exp)}"
        if sym:
            poly = " + ".join(
                rf"\left({_tex_ratfun(c)}\right)" + ("" if d == 0 else ("k" if d == 1 else f"k^{{{d}}}"))
                for d, c in enumerate(t.poly)
                if not c.is_zero()
            )
            terms.append((False, rf"\left({poly}\right) w^{{{exp}}} {_tex_g(idx, cf.n)}"))
            continue
        p = Poly(t.poly)
        neg = p.is_real() and p.lead().re < 0
        if neg:
            p = -p
        body = _tex_poly(p, "k")
        if _nterms(p) > 1:
            body = rf"\left({body}\right)"
        elif body == "1":
            body = ""
        wf = "" if cf.w == 1 else f"{{{_tex_base(cf.w)}}}^{{{exp}}}"
        terms.append((neg, f"{wf}{body}{_tex_g(idx, cf.n)}"))
    upper = r"\infty" if cf.infinite else "k"
    w = "w" if sym else _tex_base(cf.w)
    summand = ("" if (not sym and cf.w == 1) else f"{w}^j ") + (
        "" if cf.r == 0 else ("j " if cf.r == 1 else f"j^{{{cf.r}}} ")
    )
    return rf"\sum_{{j=0}}^{{{upper}}} {summand}{_tex_g('j', cf.n)} = {_join(terms)}"


def _tex_base(w) -> str:
    if isinstance(w, str):
        return "w"
    if w.is_real() and w.re >= 0 and w.re.denominator == 1:
        return _tex_scalar(w)
    return rf"\left({_tex_scalar(w).replace(chr(92) + 'left(', '').replace(chr(92) + 'right)', '')}\right)"


def render_split_latex(split: EvenOddSplit) -> str:
    n, r = split.n, split.r
    jr = "" if r == 0 else ("j " if r == 1 else f"j^{{{r}}} ")
    oddr = "" if r == 0 else ("(2j-1) " if r == 1 else f"(2j-1)^{{{r}}} ")
    out = []
    for part, lhs in (
        (split.even, rf"\sum_{{j=0}}^{{K}} (-1)^j {jr}{_tex_g('2j', n)}"),
        (split.odd, rf"\sum_{{j=1}}^{{K}} (-1)^{{j-1}} {oddr}{_tex_g('2j-1', n)}"),
    ):
        terms = []
        for j, c in part.head:
            neg = c < 0
            mag = -c if neg else c
            terms.append((neg, ("" if mag == 1 else _tex_rat(mag)) + _tex_g(str(j), n)))
        for t, poly in part.tail:
            p = Poly(poly)
            neg = p.lead().re < 0
            if neg:
                p = -p
            body = _tex_poly(p, "K")
            if _nterms(p) > 1:
                body = rf"\left({body}\right)"
            elif body == "1":
                body = ""
            idx = "2K" if t == 0 else f"2K + {t}"
            terms.append((neg, f"(-1)^K {body}{_tex_g(idx, n)}"))
        out.append(f"{lhs} = {_join(terms)}")
    return "\n".join(out)
