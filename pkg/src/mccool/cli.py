"""Command line entry point: ``mccool <command> ...`` (also ``python -m mccool``).

Exit status: 0 on success, 1 on a domain error, 2 on a usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from . import checks
from . import cohomology as coh
from .automorphisms import ExpressionError, compose, evaluate, parse_expression
from .braidperm import NotPermutationConjugacy, detect, split
from .freelie import LieError, lyndon_basis, witt_rank
from .graded import model_ranks, quotient_ranks
from .relations import FAMILIES, verify_all
from .series import closed_form_series, uea_series
from .tower import NotInKernel, decompose, gamma, kernel_word, project, retract_plus
from .words import WordError, format_word

GRAMMAR = """\
grammars:
  word        tokens x<k> (generator) / X<k> (inverse) separated by spaces or '*'; '' is the identity
  expression  factors c[k,i] th[k;s,t] xi[i] tau[i] delta s[i], optional suffix ^-1,
              separated by '*' or spaces, e.g. "c[3,2]^-1 * c[2,1] * xi[1]"
  monomial    d[i,j] factors joined by '*', with 1 <= j < i <= n; '1' is the unit
"""


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write(f"{self.prog}: error: {message}\n\n{GRAMMAR}")
        sys.exit(2)


def _emit(obj, fmt: str, text: str) -> None:
    if fmt == "json":
        print(json.dumps(obj, sort_keys=True))
    else:
        print(text)


def _ranks_csv(table: dict[int, int], label: str) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["degree", label])
    for d in sorted(table):
        w.writerow([d, table[d]])
    return buf.getvalue().rstrip("\n")


# ---------------------------------------------------------------------------
# command implementations


def cmd_verify(args) -> int:
    report = verify_all(args.n, args.family)
    if args.format == "json":
        print(json.dumps(report.to_json(), sort_keys=True))
    else:
        counts = report.counts
        for fam in FAMILIES:
            bad = sum(1 for f, _ in report.failures if f == fam)
            print(f"{fam:18} {counts[fam]:6d} instances  {bad} failures")
        print(f"total {len(report.results)} instances, {len(report.failures)} failures")
    return 0 if report.ok else 1


def cmd_aut(args) -> int:
    f = evaluate(parse_expression(args.expr, args.n))
    if args.action == "compose":
        f = compose(f, evaluate(parse_expression(args.with_expr, args.n)))
    images = f.format()
    text = "\n".join(f"x{i} -> {w}" for i, w in enumerate(images, start=1))
    _emit({"images": images}, args.format, text)
    return 0


def cmd_project(args) -> int:
    e = project(parse_expression(args.expr, args.n), args.variant)
    _emit({"projection": str(e), "n": e.rank}, args.format, str(e))
    return 0


def cmd_decompose(args) -> int:
    dec = decompose(parse_expression(args.expr, args.n), args.variant)
    out = {"w_head": str(dec.w_head), "x_tail": str(dec.x_tail)}
    if args.variant == "plus":
        out["kernel_word"] = str(kernel_word(dec.x_tail))
    text = "\n".join(f"{k}: {v}" for k, v in out.items())
    _emit(out, args.format, text)
    return 0


def cmd_retract(args) -> int:
    w = retract_plus(evaluate(parse_expression(args.expr, args.n)))
    _emit({"word": format_word(w)}, args.format, format_word(w))
    return 0


def cmd_gamma(args) -> int:
    g = gamma(parse_expression(args.expr, args.n))
    _emit({"gamma": list(g)}, args.format, " ".join(map(str, g)))
    return 0


def cmd_lie(args) -> int:
    if args.action == "witt":
        r = witt_rank(args.m, args.degree)
        _emit({"m": args.m, "degree": args.degree, "rank": r}, args.format, str(r))
        return 0
    basis = lyndon_basis(args.m, args.degree)
    words = ["".join(map(str, b.word)) for b in basis]
    brackets = [str(b) for b in basis]
    _emit({"words": words, "brackets": brackets}, args.format, "\n".join(brackets))
    return 0


def cmd_gr(args) -> int:
    D = args.max_degree
    if args.action == "series":
        s = uea_series(model_ranks(args.n, D), D)
        if s != closed_form_series(args.n, D):
            print("error: enveloping algebra series disagrees with the closed form", file=sys.stderr)
            return 1
        _emit(s.to_json(), args.format, " ".join(map(str, s)))
        return 0
    if args.variant == "plus":
        table = model_ranks(args.n, D)
        label = "rank"
        if args.oracle:
            oracle = quotient_ranks(args.n, "plus", D)
            if oracle != table:
                print(f"error: oracle ranks {oracle} disagree with model ranks {table}", file=sys.stderr)
                return 1
    else:
        table = quotient_ranks(args.n, "full", D)
        label = "upper_bound"
    if args.format == "json":
        payload = {str(d): r for d, r in table.items()}
        if args.variant == "full":
            payload = {"upper bound for gr*(PSigma_n) ranks": payload}
        print(json.dumps(payload, sort_keys=True))
    elif args.format == "csv":
        print(_ranks_csv(table, label))
    else:
        if args.variant == "full":
            print("upper bound for gr*(PSigma_n) ranks")
        for d in sorted(table):
            print(f"{d}\t{table[d]}")
    return 0


def cmd_coh(args) -> int:
    if args.action == "basis":
        monos = [coh.format_monomial(m) for m in coh.basis(args.n, args.degree)]
        _emit({"basis": monos}, args.format, "\n".join(monos))
    elif args.action == "mult":
        a = coh.normalize(args.n, coh.parse_monomial(args.a, args.n))
        b = coh.normalize(args.n, coh.parse_monomial(args.b, args.n))
        c = coh.multiply(a, b)
        _emit(c.to_json(), args.format, str(c))
    else:
        p = coh.poincare_polynomial(args.n)
        _emit(p.to_json(), args.format, " ".join(map(str, p)))
    return 0


def cmd_bp(args) -> int:
    f = evaluate(parse_expression(args.expr, args.n))
    pure, lam = split(f)
    out = {
        "lambda": str(lam),
        "pure": pure.format(),
        "conjugators": [format_word(w) for w in detect(f).conjugators],
    }
    text = f"lambda: {out['lambda']}\n" + "\n".join(
        f"x{i} -> {w}" for i, w in enumerate(out["pure"], start=1))
    _emit(out, args.format, text)
    return 0


def cmd_acceptance(args) -> int:
    results = checks.run(args.criterion or None, seed=args.seed)
    if args.format == "json":
        print(json.dumps([
            {"criterion": r.number, "title": r.title, "ok": r.ok} for r in results], sort_keys=True))
    else:
        for r in results:
            print(r.line(timings=args.timings))
    return 0 if all(r.ok for r in results) else 1


# ---------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="mccool", description=__doc__.splitlines()[0],
                epilog=GRAMMAR, formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def fmt(sp, choices=("text", "json"), default="text"):
        sp.add_argument("--format", choices=choices, default=default)

    def rank_n(sp):
        sp.add_argument("--n", type=int, required=True)

    sp = sub.add_parser("verify", help="verify every catalogued relation at rank n")
    rank_n(sp)
    sp.add_argument("--family", help="family name or prefix, e.g. mccool-1 or kernel")
    fmt(sp)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("aut", help="evaluate or compose generator expressions")
    sp.add_argument("action", choices=("eval", "compose"))
    rank_n(sp)
    sp.add_argument("--expr", required=True)
    sp.add_argument("--with", dest="with_expr", default="", help="right-hand factor for compose")
    fmt(sp)
    sp.set_defaults(func=cmd_aut)

    for name, func, help_ in (
        ("project", cmd_project, "apply the projection to level n-1"),
        ("decompose", cmd_decompose, "split into section image and kernel part"),
        ("retract", cmd_retract, "recover W from an element of K_n^+"),
        ("gamma", cmd_gamma, "abelianization map on K_n generator words"),
    ):
        sp = sub.add_parser(name, help=help_)
        rank_n(sp)
        sp.add_argument("--expr", required=True)
        if name in ("project", "decompose"):
            sp.add_argument("--variant", choices=("full", "plus"), default="full")
        fmt(sp)
        sp.set_defaults(func=func)

    sp = sub.add_parser("lie", help="free Lie algebra bases and ranks")
    sp.add_argument("action", choices=("basis", "witt"))
    sp.add_argument("--m", type=int, required=True)
    sp.add_argument("--degree", type=int, required=True)
    fmt(sp)
    sp.set_defaults(func=cmd_lie)

    sp = sub.add_parser("gr", help="graded Lie algebra ranks and series")
    sp.add_argument("action", choices=("ranks", "series"))
    rank_n(sp)
    sp.add_argument("--variant", choices=("plus", "full"), default="plus")
    sp.add_argument("--max-degree", type=int, required=True)
    sp.add_argument("--oracle", action="store_true", help="cross-check plus ranks by elimination")
    fmt(sp, ("text", "json", "csv"))
    sp.set_defaults(func=cmd_gr)

    sp = sub.add_parser("coh", help="cohomology ring of PSigma_n^+")
    sp.add_argument("action", choices=("basis", "mult", "poincare"))
    rank_n(sp)
    sp.add_argument("--degree", type=int, default=1)
    sp.add_argument("--a", default="1")
    sp.add_argument("--b", default="1")
    fmt(sp)
    sp.set_defaults(func=cmd_coh)

    sp = sub.add_parser("bp", help="braid-permutation splitting")
    sp.add_argument("action", choices=("split",))
    rank_n(sp)
    sp.add_argument("--expr", required=True)
    fmt(sp)
    sp.set_defaults(func=cmd_bp)

    sp = sub.add_parser("acceptance", help="run the acceptance checks")
    sp.add_argument("--criterion", type=int, action="append", choices=sorted(checks.ALL))
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--timings", action="store_true", help="include wall-clock seconds (not reproducible)")
    fmt(sp)
    sp.set_defaults(func=cmd_acceptance)
    return p


DOMAIN_ERRORS = (
    WordError, ExpressionError, LieError, coh.CohomologyError,
    NotInKernel, NotPermutationConjugacy, ValueError,
)


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except DOMAIN_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
