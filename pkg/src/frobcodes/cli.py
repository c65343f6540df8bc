"""Command-line interface.

Exit codes: 0 success, 1 verification failure, 2 invalid parameters,
3 malformed input file.
"""

import argparse
import json
import sys

from . import codes as cg
from .errors import InvalidParams, ParseError, RankDeficiency, TooLarge, XiNotInVminus, XiZero
from .ext_field import FieldCtx
from .field_core import check_odd_prime, find_irreducible, format_poly, parse_poly
from .formats import (
    code_details,
    format_listing,
    format_operators,
    listing_document,
    load_worked_example,
    parse_listing,
)
from .frobenius import DecompositionCtx
from .grassmann import format_grouped, grass_count
from .linalg import Matrix
from .verify import run_checks

EXIT_OK, EXIT_VERIFY, EXIT_PARAMS, EXIT_PARSE = 0, 1, 2, 3

PARAM_ERRORS = (InvalidParams, XiZero, XiNotInVminus, ParseError, ValueError)


class CliError(Exception):
    def __init__(self, message, code):
        super().__init__(message)
        self.code = code


def build_field(args):
    p = check_odd_prime(args.p)
    if args.k < 1:
        raise InvalidParams("k must be >= 1")
    n = 2 * args.k
    if args.poly is None:
        f = find_irreducible(p, n, args.seed)
    else:
        f = parse_poly(args.poly, p)
        if len(f) - 1 != n:
            raise InvalidParams(f"--poly has degree {len(f) - 1}, expected n = 2k = {n}")
    return FieldCtx(p, f)


def build_context(args):
    field = build_field(args)
    return DecompositionCtx(field, xi=args.xi)


def _apply_example(args):
    if getattr(args, "example", False):
        fx = load_worked_example()
        args.p, args.k = fx["p"], fx["k"]
        args.poly = ",".join(map(str, fx["f"]))
        if args.xi is None:
            args.xi = "[" + ",".join(map(str, fx["xi"])) + "]"


def _emit(args, text):
    if getattr(args, "out", None):
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _dump_json(obj):
    return json.dumps(obj, indent=1) + "\n"


def cmd_field(args):
    field = build_field(args)
    g = field.find_primitive_root(args.seed)
    order = field.element_order(g)
    if args.format == "json":
        return _dump_json(
            {"p": field.p, "n": field.n, "f": list(field.f), "primitive_root": list(g.coords), "order": order}
        )
    return (
        f"p = {field.p}\nn = {field.n}\nf = {format_poly(field.f)}\n"
        f"primitive_root = {g}\norder = {order}\n"
    )


def cmd_operators(args):
    ctx = build_context(args)
    if args.format == "json":
        return _dump_json(ctx.to_dict())
    return format_operators(ctx)


def cmd_generate(args):
    ctx = build_context(args)
    codes = cg.generate_all(ctx, args.parallel)
    if args.format == "json":
        details = None
        if args.details or args.distance:
            details = [_details(i, c, args) for i, c in enumerate(codes, 1)]
        return _dump_json(listing_document(ctx, codes, details))
    return format_listing(codes)


def _details(index, code, args, full=None):
    full = args.details if full is None else full
    sf = cg.standard_form(code) if full else None
    H = cg.check_matrix(code) if full else None
    d = cg.min_distance(code) if args.distance else None
    return code_details(index, code, sf, H, d)


def _read_input(path):
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path) as fh:
            return fh.read()
    except OSError as exc:
        raise CliError(str(exc), EXIT_PARSE) from None


def _load_codes(text, args):
    stripped = text.lstrip()
    if stripped.startswith("{"):
        try:
            doc = json.loads(text)
            p = check_odd_prime(doc["p"])
            mats = [(i, Matrix(rows, p), None) for i, rows in enumerate(doc["codes"], 1)]
        except (ValueError, KeyError, TypeError) as exc:
            raise CliError(f"bad JSON listing: {exc}", EXIT_PARSE) from None
    else:
        p = check_odd_prime(args.p)
        try:
            mats = parse_listing(text, p)
        except ParseError as exc:
            raise CliError(str(exc), EXIT_PARSE) from None
    out = []
    for index, m, line in mats:
        try:
            out.append((index, cg.LinearCode(m)))
        except RankDeficiency as exc:
            where = f"line {line}: " if line else ""
            raise CliError(f"{where}code #{index}: {exc}", EXIT_PARSE) from None
    return out


def cmd_analyze(args):
    loaded = _load_codes(_read_input(args.input), args)
    if args.format == "json":
        return _dump_json([_details(i, c, args, full=True) for i, c in loaded])
    parts = []
    for index, code in loaded:
        sf = cg.standard_form(code)
        lines = [
            f"# {index}",
            "perm: " + " ".join(str(j + 1) for j in sf.perm),
            "standard_form:",
            str(sf.matrix),
            "check_matrix:",
            str(cg.check_matrix(code)),
        ]
        if args.distance:
            lines.append(f"min_distance: {cg.min_distance(code)}")
        parts.append("\n".join(lines) + "\n")
    return "\n".join(parts)


def cmd_verify(args):
    ctx = build_context(args)
    results = run_checks(ctx, samples=args.samples, seed=args.seed, workers=args.parallel)
    failures = sum(1 for _, ok in results if not ok)
    if args.format == "json":
        text = _dump_json({"checks": [{"name": n, "ok": ok} for n, ok in results], "failures": failures})
    else:
        lines = [f"{'PASS' if ok else 'FAIL'}  {name}" for name, ok in results]
        lines.append(f"{len(results) - failures}/{len(results)} checks passed")
        text = "\n".join(lines) + "\n"
    return text, (EXIT_OK if failures == 0 else EXIT_VERIFY)


def cmd_count(args):
    value = grass_count(args.k, args.n, args.q)
    return (format_grouped(value) if args.group else str(value)) + "\n"


def make_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--p", type=int, default=7, help="odd prime characteristic (default 7)")
    common.add_argument("--k", type=int, default=3, help="code dimension; field degree is n = 2k (default 3)")
    common.add_argument("--poly", help='modulus, e.g. "1,1,2,1,5,3,2" or "X^6+X^5+2*X^4+X^3+5*X^2+3*X+2"')
    common.add_argument("--xi", help='nonzero element of V-, e.g. "[2,6,5,5,0,4]" or "2*X^5+6*X^4+5*X^3+5*X^2+4"')
    common.add_argument("--seed", type=int, default=0, help="seed for polynomial and primitive-root searches")
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--out", help="write output to this file instead of stdout")
    common.add_argument("--example", action="store_true", help="use the worked F_{7^6} example (p=7, k=3, its f and xi)")

    parser = argparse.ArgumentParser(prog="frobcodes", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser("field", parents=[common], help="modulus, primitive root and its order")
    sub.add_parser("operators", parents=[common], help="dump sigma, tau, pi+-, V+-, xi")

    gen = sub.add_parser("generate", parents=[common], help="emit all p^k + 1 codes")
    gen.add_argument("--details", action="store_true", help="JSON only: add standard form and check matrix")
    gen.add_argument("--distance", action="store_true", help="JSON only: add minimum distance")
    gen.add_argument("--parallel", type=int, default=None, metavar="N", help="embed with N processes")

    ana = sub.add_parser("analyze", parents=[common], help="standard form, check matrix, distance of a listing")
    ana.add_argument("input", help="listing file (text or JSON); '-' for stdin")
    ana.add_argument("--distance", action="store_true")

    ver = sub.add_parser("verify", parents=[common], help="run the invariant suite")
    ver.add_argument("--samples", type=int, default=100)
    ver.add_argument("--parallel", type=int, default=None, metavar="N")

    cnt = sub.add_parser("count", help="number of k-dimensional subspaces of F_q^n")
    cnt.add_argument("--k", type=int, required=True)
    cnt.add_argument("--n", type=int, required=True)
    cnt.add_argument("--q", type=int, required=True)
    cnt.add_argument("--group", action="store_true", help="separate digit groups with spaces")
    cnt.add_argument("--out")
    return parser


COMMANDS = {
    "field": cmd_field,
    "operators": cmd_operators,
    "generate": cmd_generate,
    "analyze": cmd_analyze,
    "verify": cmd_verify,
    "count": cmd_count,
}


def main(argv=None):
    args = make_parser().parse_args(argv)
    try:
        _apply_example(args)
        result = COMMANDS[args.command](args)
    except CliError as exc:
        print(f"frobcodes: {exc}", file=sys.stderr)
        return exc.code
    except TooLarge as exc:
        print(f"frobcodes: {exc}", file=sys.stderr)
        return EXIT_PARAMS
    except PARAM_ERRORS as exc:
        print(f"frobcodes: {exc}", file=sys.stderr)
        return EXIT_PARAMS
    code = EXIT_OK
    if isinstance(result, tuple):
        result, code = result
    _emit(args, result)
    return code


if __name__ == "__main__":
    sys.exit(main())
