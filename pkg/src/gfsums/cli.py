"""Command-line front end.

Exit codes: 0 success, 1 verification or golden failure, 2 usage error,
3 singular or divergent weight.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time

from . import engine
from .errors import Divergent, SingularWeight, UnsupportedBasis
from .exact import as_gauss, format_gauss
from .fib import FIBONACCI, Seeds
from .golden import load_corpus, run_corpus
from .oracle import DEFAULT_W_GRID, brute_sum, default_config, run_sweep
from .render import dumps, render_latex, render_split_latex, render_split_text, render_text

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_WEIGHT = 0, 1, 2, 3

BASES = {"gk": "standard", "gk1": "shifted"}


class UsageError(Exception):
    pass


# -- argument types -------------------------------------------------------------


def _weight(text: str):
    if text == engine.SYMBOLIC:
        return text
    try:
        return as_gauss(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a weight: {text!r}") from None


def _seeds(text: str) -> Seeds:
    try:
        return Seeds.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _nonneg(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if v < 0:
        raise argparse.ArgumentTypeError(f"must be >= 0, got {v}")
    return v


def _positive(text: str) -> int:
    v = _nonneg(text)
    if v < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return v


def _k_list(text: str) -> list[int]:
    return [_nonneg(part) for part in text.split(",") if part.strip()]


def _w_grid(text: str) -> list:
    out = []
    for part in text.split(","):
        w = _weight(part.strip())
        if w == engine.SYMBOLIC:
            raise argparse.ArgumentTypeError("the sweep grid needs numeric weights")
        out.append(w)
    return out


# -- parser -----------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gfsums",
        description="Exact closed forms for weighted power sums of generalized Fibonacci numbers.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, *, r=True, w=True):
        p.add_argument("--n", type=_positive, default=1, help="power of G_j (default 1)")
        if r:
            p.add_argument("--r", type=_nonneg, default=0, help="power of j (default 0)")
        if w:
            p.add_argument("--w", type=_weight, default=as_gauss(1), help="weight: p/q, a+b*i or 'symbolic'")
        p.add_argument("--out", help="write output to PATH instead of stdout")

    p = sub.add_parser("closed-form", help="print the closed form of the finite sum")
    common(p)
    p.add_argument("--basis", choices=sorted(BASES), help="gk: tail on G_k, G_{k+1} (n=1 only); gk1: shifted tail")
    p.add_argument("--format", choices=("text", "latex", "json", "csv"), default="text")

    p = sub.add_parser("eval", help="evaluate the sum at one or more k through the closed form")
    common(p)
    p.add_argument("--k", type=_nonneg, help="upper limit")
    p.add_argument("--k-list", type=_k_list, help="comma-separated upper limits")
    p.add_argument("--seeds", type=_seeds, default=FIBONACCI, help="G0,G1 (default 0,1)")
    p.add_argument("--format", choices=("text", "json", "csv"), default="text")

    p = sub.add_parser("genfunc", help="print the infinite sum (generating function value)")
    common(p)
    p.add_argument("--analytic", action="store_true", help="print the head even for a divergent weight")
    p.add_argument("--format", choices=("text", "latex", "json", "csv"), default="text")

    p = sub.add_parser("split", help="even and odd alternating sums from the weight w = i")
    common(p, w=False)
    p.add_argument("--format", choices=("text", "latex", "json"), default="text")

    p = sub.add_parser("verify", help="sweep closed forms against direct summation")
    p.add_argument("--max-n", type=_positive, default=4)
    p.add_argument("--max-r", type=_nonneg, default=4)
    p.add_argument("--max-k", type=_nonneg, default=25)
    p.add_argument("--w-grid", type=_w_grid, default=None, help="comma-separated weights")
    p.add_argument("--trials", type=_nonneg, default=2, help="random rational seed pairs")
    p.add_argument("--rng-seed", type=int, default=0)
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.add_argument("--out")

    p = sub.add_parser("paper-table", help="regenerate the golden identity corpus and diff")
    p.add_argument("--only", metavar="ID", help="run one entry")
    p.add_argument("--corpus", metavar="PATH", help="alternative fixture file")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--out")

    p = sub.add_parser("bench", help="time closed-form evaluation against direct summation")
    common(p)
    p.add_argument("--k-list", type=_k_list, default=[1000, 10000, 100000])
    p.add_argument("--seeds", type=_seeds, default=FIBONACCI)
    p.add_argument("--format", choices=("json", "csv"), default="json")
    return parser


# -- commands ---------------------------------------------------------------------


def _basis(args) -> str:
    if args.basis is None:
        return "standard" if args.n == 1 else "shifted"
    basis = BASES[args.basis]
    if basis == "standard" and args.n != 1:
        raise UsageError("--basis gk needs --n 1")
    return basis


def _cf_csv(cf) -> str:
    buf = io.StringIO()
    out = csv.writer(buf, lineterminator="\n")
    out.writerow(["part", "index", "w_exp_offset", "k_degree", "coeff"])
    sym = cf.symbolic
    fmt = (lambda c: str(c)) if sym else format_gauss
    for j, c in cf.head:
        out.writerow(["head", j, "", "", fmt(c)])
    for t in cf.tail:
        for d, c in enumerate(t.poly):
            out.writerow(["tail", t.offset, t.w_exp, d, fmt(c)])
    return buf.getvalue()


def _render_cf(cf, fmt: str) -> str:
    if fmt == "json":
        return dumps(cf)
    if fmt == "csv":
        return _cf_csv(cf)
    if fmt == "latex":
        return render_latex(cf) + "\n"
    return render_text(cf) + "\n"


def cmd_closed_form(args) -> tuple[int, str]:
    cf = engine.closed_form(args.n, args.r, args.w, _basis(args))
    return EXIT_OK, _render_cf(cf, args.format)


def cmd_eval(args) -> tuple[int, str]:
    if args.w == engine.SYMBOLIC:
        raise UsageError("eval needs a numeric --w")
    ks = args.k_list if args.k_list is not None else ([args.k] if args.k is not None else None)
    if not ks:
        raise UsageError("eval needs --k or --k-list")
    cf = engine.closed_form(args.n, args.r, args.w)
    values = [(k, engine.evaluate_closed(cf, k, args.seeds)) for k in ks]
    if args.format == "json":
        rows = [{"k": k, "value": format_gauss(v)} for k, v in values]
        body = {"n": args.n, "r": args.r, "w": format_gauss(args.w), "seeds": str(args.seeds), "values": rows}
        return EXIT_OK, dumps(body)
    if args.format == "csv":
        return EXIT_OK, "k,value\n" + "".join(f"{k},{format_gauss(v)}\n" for k, v in values)
    return EXIT_OK, "".join(f"{format_gauss(v)}\n" for _, v in values)


def cmd_genfunc(args) -> tuple[int, str]:
    cf = engine.generating_function(args.n, args.r, args.w, analytic=args.analytic)
    text = _render_cf(cf, args.format)
    if cf.divergent and args.format in ("text", "latex"):
        text = "# divergent weight: analytic continuation only\n" + text
    return EXIT_OK, text


def cmd_split(args) -> tuple[int, str]:
    split = engine.split_alternating(args.n, args.r)
    if args.format == "json":
        return EXIT_OK, dumps(split)
    if args.format == "latex":
        return EXIT_OK, render_split_latex(split) + "\n"
    return EXIT_OK, render_split_text(split) + "\n"


def cmd_verify(args) -> tuple[int, str]:
    config = default_config(
        n_max=args.max_n,
        r_max=args.max_r,
        k_max=args.max_k,
        w_grid=args.w_grid if args.w_grid is not None else DEFAULT_W_GRID,
        trials=args.trials,
        rng_seed=args.rng_seed,
    )
    report = run_sweep(config)
    code = EXIT_OK if report.ok else EXIT_FAIL
    if args.format == "text":
        s = report.summary()
        lines = [f"pass {s['pass']}  fail {s['fail']}  skipped {s['skipped']}"]
        for case in report.failures:
            lines.append(json.dumps(case.to_json(), sort_keys=True))
        return code, "\n".join(lines) + "\n"
    return code, report.dumps() + "\n"


def cmd_paper_table(args) -> tuple[int, str]:
    entries = load_corpus(args.corpus)
    if args.only is not None and not any(e.id == args.only for e in entries):
        raise UsageError(f"no golden entry with id {args.only!r}")
    results = run_corpus(entries, only=args.only)
    code = EXIT_OK if all(r.ok for r in results) else EXIT_FAIL
    if args.format == "json":
        passed = sum(r.ok for r in results)
        body = {
            "summary": {"pass": passed, "fail": len(results) - passed},
            "entries": [r.to_json() for r in results],
        }
        return code, dumps(body)
    lines = []
    for r in results:
        lines.append(f"{'PASS' if r.ok else 'FAIL'}  {r.id}")
        if r.error:
            lines.append(f"      error: {r.error}")
        for d in r.diff:
            lines.append(f"      {d['term']}: expected {d['expected']}, got {d['actual']}")
    passed = sum(r.ok for r in results)
    lines.append(f"{passed}/{len(results)} identities reproduced")
    return code, "\n".join(lines) + "\n"


def cmd_bench(args) -> tuple[int, str]:
    if args.w == engine.SYMBOLIC:
        raise UsageError("bench needs a numeric --w")
    t0 = time.perf_counter()
    cf = engine.closed_form(args.n, args.r, args.w)
    synth = time.perf_counter() - t0
    rows = []
    for k in args.k_list:
        t0 = time.perf_counter()
        closed = engine.evaluate_closed(cf, k, args.seeds)
        t_closed = time.perf_counter() - t0
        t0 = time.perf_counter()
        brute = brute_sum(args.n, args.r, args.w, k, args.seeds)
        t_brute = time.perf_counter() - t0
        rows.append(
            {
                "k": k,
                "equal": closed == brute,
                "timing": {
                    "closed_form_s": t_closed,
                    "brute_force_s": t_brute,
                    "speedup": t_brute / t_closed if t_closed > 0 else None,
                },
            }
        )
    code = EXIT_OK if all(r["equal"] for r in rows) else EXIT_FAIL
    if args.format == "csv":
        buf = io.StringIO()
        out = csv.writer(buf, lineterminator="\n")
        out.writerow(["k", "equal", "timing_closed_form_s", "timing_brute_force_s", "timing_speedup"])
        for r in rows:
            t = r["timing"]
            out.writerow([r["k"], r["equal"], f"{t['closed_form_s']:.6g}", f"{t['brute_force_s']:.6g}",
                          "" if t["speedup"] is None else f"{t['speedup']:.3g}"])
        return code, buf.getvalue()
    body = {
        "n": args.n,
        "r": args.r,
        "w": format_gauss(args.w),
        "seeds": str(args.seeds),
        "timing": {"synthesis_s": synth},
        "results": rows,
    }
    return code, dumps(body)


COMMANDS = {
    "closed-form": cmd_closed_form,
    "eval": cmd_eval,
    "genfunc": cmd_genfunc,
    "split": cmd_split,
    "verify": cmd_verify,
    "paper-table": cmd_paper_table,
    "bench": cmd_bench,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)  # exits with status 2 on bad flags
    try:
        code, text = COMMANDS[args.command](args)
    except (UsageError, UnsupportedBasis) as exc:
        parser.error(str(exc))
    except SingularWeight as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_WEIGHT
    except Divergent as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_WEIGHT
    if getattr(args, "out", None):
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
