"""Command-line interface.

Matrix inputs may be a file path (JSON or compact text), an inline JSON
matrix, inline compact text with ``;`` between rows, or a catalog id.
Exit codes: 0 success, 1 verification failure, 2 usage or parse error.
"""
from __future__ import annotations

import argparse
import json
import os
import sys

from . import catalog
from .classification import classify, spherical_residues
from .coxeter import CoxeterMatrixError, find_isomorphism, load_matrix, parse_matrix
from .growth import coefficients, growth_rate
from .oracle import CensusBudgetError, count_by_length
from .order import in_X, is_leq, is_minimal
from .poincare import steinberg_poincare


class UsageError(Exception):
    pass


def resolve_matrix(arg: str):
    if os.path.isfile(arg):
        return load_matrix(arg)
    text = arg.strip()
    if catalog.is_catalog_id(text):
        return catalog.get_entry(text).matrix
    if text.startswith(("[", "{")) or any(ch.isdigit() for ch in text):
        return parse_matrix(text)
    raise UsageError(f"cannot interpret {arg!r} as a file, matrix or catalog id")


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ": "), indent=2)


def _emit(args, human: str, data) -> None:
    if args.format == "json":
        print(_dump(data))
    else:
        print(human)


def cmd_classify(args):
    label = classify(resolve_matrix(args.input))
    _emit(args, str(label), label.to_json())
    return 0


def cmd_poincare(args):
    p = steinberg_poincare(resolve_matrix(args.input))
    human = f"numerator:   {p.num.format()}\ndenominator: {p.den.format()}"
    _emit(args, human, p.rf.to_json())
    return 0


def cmd_coeffs(args):
    if args.count < 0:
        raise UsageError("--count must be nonnegative")
    cs = coefficients(steinberg_poincare(resolve_matrix(args.input)), args.count)
    _emit(args, ", ".join(str(c) for c in cs), [str(c) for c in cs])
    return 0


def cmd_growth(args):
    if args.digits < 10:
        raise UsageError("--digits must be at least 10")
    g = growth_rate(steinberg_poincare(resolve_matrix(args.input)), args.digits)
    _emit(args, g.value, g.to_json())
    return 0


def cmd_residues(args):
    res = spherical_residues(resolve_matrix(args.input))
    human = "\n".join("{" + ",".join(map(str, r)) + "}" for r in res)
    _emit(args, human, [list(r) for r in res])
    return 0


def cmd_minimal(args):
    m = resolve_matrix(args.input)
    x = in_X(m)
    minimal = is_minimal(m) if x else None
    human = "not in X" if not x else ("minimal" if minimal else "not minimal")
    _emit(args, human, {"in_X": x, "minimal": minimal})
    return 0


def cmd_compare(args):
    a, b = resolve_matrix(args.a), resolve_matrix(args.b)
    ab, ba = is_leq(a, b), is_leq(b, a)
    iso = find_isomorphism(a, b)
    data = {
        "a_leq_b": ab.to_json() if ab else None,
        "b_leq_a": ba.to_json() if ba else None,
        "isomorphic": iso is not None,
        "isomorphism": list(iso) if iso else None,
    }
    lines = [f"a <= b: {'yes ' + str(list(ab.injection)) if ab else 'no'}",
             f"b <= a: {'yes ' + str(list(ba.injection)) if ba else 'no'}",
             f"isomorphic: {'yes' if iso else 'no'}"]
    _emit(args, "\n".join(lines), data)
    return 0


def cmd_oracle(args):
    census = count_by_length(resolve_matrix(args.input), args.max_len, budget=args.budget)
    human = ", ".join(map(str, census.counts)) + ("  (complete)" if census.complete else "")
    _emit(args, human, census.to_json())
    return 0


def cmd_catalog(args):
    if args.action == "list":
        rows = [{"id": e.id, "rank": e.rank, "magma_index": e.magma_index,
                 "cocompact": e.cocompact, "in_M": e.in_M} for e in catalog.catalog_entries()]
        human = "\n".join(
            f"{r['id']:<10} rank {r['rank']:<2} magma {r['magma_index'] or '-':<3} "
            f"cocompact {'yes' if r['cocompact'] else 'no ':<3} in_M {'yes' if r['in_M'] else 'no'}"
            for r in rows)
        _emit(args, human, rows)
        return 0
    if args.action == "show":
        if not args.id:
            raise UsageError("catalog show needs an id")
        e = catalog.get_entry(args.id)
        human = "\n".join([
            f"id: {e.id}", f"rank: {e.rank}", "matrix:", e.matrix.to_compact(),
            f"numerator: {e.expected_num.format()}", f"denominator: {e.expected_den.format()}",
            f"coefficients: {', '.join(map(str, e.expected_coeffs))}",
            f"growth: {e.expected_growth}", f"cocompact: {e.cocompact}", f"in_M: {e.in_M}",
        ])
        _emit(args, human, e.to_json())
        return 0
    # verify
    entries = [catalog.get_entry(args.id)] if args.id else None
    bad = catalog.check_manifest()
    if bad:
        print(f"checksum mismatch: {', '.join(bad)}", file=sys.stderr)
    report = catalog.verify_catalog(entries, catalog.VerifyConfig(workers=args.workers))
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(_dump(report.to_json()) + "\n")
    if args.format == "json":
        print(_dump(report.to_json()))
    else:
        for e in report.entries:
            if not e.passed:
                print(f"FAIL {e.id}: {', '.join(e.failures())}")
        print(f"{report.summary()} entries verified")
    return 0 if report.ok and not bad else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="coxgrowth",
                                     description="Growth series of Coxeter systems.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("human", "json"), default="human")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_):
        p = sub.add_parser(name, parents=[common], help=help_)
        p.set_defaults(func=func)
        return p

    add("classify", cmd_classify, "spherical/affine/hyperbolic/other verdict").add_argument("input")
    add("poincare", cmd_poincare, "Poincaré series numerator and denominator").add_argument("input")
    p = add("coeffs", cmd_coeffs, "series coefficients")
    p.add_argument("input")
    p.add_argument("--count", type=int, default=20)
    p = add("growth", cmd_growth, "exponential growth rate")
    p.add_argument("input")
    p.add_argument("--digits", type=int, default=30)
    add("residues", cmd_residues, "spherical residues").add_argument("input")
    add("minimal", cmd_minimal, "minimality in X").add_argument("input")
    p = add("compare", cmd_compare, "compare two systems in the preorder")
    p.add_argument("a")
    p.add_argument("b")
    p = add("oracle", cmd_oracle, "brute-force census by word length")
    p.add_argument("input")
    p.add_argument("--max-len", type=int, default=6)
    p.add_argument("--budget", type=int, default=10 ** 8)
    p = add("catalog", cmd_catalog, "embedded dataset")
    p.add_argument("action", choices=("list", "show", "verify"))
    p.add_argument("id", nargs="?")
    p.add_argument("--id", dest="id_opt")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--output")
    return parser


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if getattr(args, "command", None) == "catalog":
        args.id = args.id_opt or args.id
    try:
        return args.func(args)
    except (UsageError, CoxeterMatrixError, catalog.CatalogError, CensusBudgetError, ValueError) as exc:
        msg = exc.args[0] if exc.args else str(exc)
        print(f"error: {msg}", file=sys.stderr)
        return 2


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
