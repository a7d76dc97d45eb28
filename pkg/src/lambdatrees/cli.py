"""Command-line front end.

Exit status is 0 on success, 1 on a domain error (the error's class name is
printed on stderr) and 2 on malformed input (with line and column).
Input paths may be ``-`` for stdin.
"""

from __future__ import annotations

import argparse
import sys

from .errors import LambdaTreesError, ParseError
from .groups import GroupKind
from .indeterminacy import (
    gcd_pullapart_check,
    int1_quadruple,
    int1_triple,
    int2_linear,
    int2_membership,
    int2_quadratic_image,
    parse_intersection_data,
    report_csv,
    report_json,
)
from .lambda_form import format_lambda, lambda_rank, normalize_lambda
from .lie import eta, format_lie_sum, lie_normalize
from .milnor import (
    MeridianWord,
    first_nonvanishing_order,
    magnus_expand,
    mu_invariants,
    parse_longitudes,
    verify_eta_identity,
)
from .operations import op_delete, op_parallel, op_reverse, op_sum
from .treesum import forest_to_sum, format_treesum, parse_forest, parse_treesum

OPS = {"delta": "parallel", "δ": "parallel", "sigma": "sum", "σ": "sum", "s": "reverse", "e": "delete"}


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _load_sum(text, args):
    kind = GroupKind.parse(args.group)
    first = next((ln.strip() for ln in text.splitlines() if ln.split("#", 1)[0].strip()), "")
    if first[:1] in "+-" and not first[1:2].isdigit():
        return forest_to_sum(parse_forest(text, args.order, args.labels, kind))
    return parse_treesum(text, args.order, args.labels, kind)


def _lie_lines(a) -> str:
    return format_lie_sum(lie_normalize(a).to_lie()) or "0\n"


def _lattice_text(L) -> str:
    lines = ["image basis:"]
    lines += ["  " + " ".join(map(str, row)) for row in L.basis] or ["  (zero)"]
    lines.append("invariant factors: " + " ".join(map(str, L.invariant_factors)))
    lines.append("quotient: " + L.quotient_description())
    return "\n".join(lines) + "\n"


# ------------------------------------------------------------------ verbs


def cmd_normalize(args):
    return format_lambda(normalize_lambda(_load_sum(_read(args.file), args))) or "0\n"


def cmd_rank(args):
    return f"{lambda_rank(args.n, args.m)}\n"


def cmd_op(args):
    s = _load_sum(_read(args.file), args)
    name = OPS[args.which]
    if name == "parallel":
        out = op_parallel(s, args.i)
    elif name == "sum":
        if args.j is None:
            raise ParseError("sigma needs two labels", 1, 1)
        out = op_sum(s, args.i, args.j)
    elif name == "reverse":
        out = op_reverse(s, args.i)
    else:
        out = op_delete(s, args.i)
    return format_treesum(out) or "0\n"


def cmd_eta(args):
    s = _load_sum(_read(args.file), args)
    return _lie_lines(eta(args.i, s))


def cmd_magnus(args):
    w = MeridianWord.parse(0, " ".join(args.word))
    return f"{magnus_expand(w, args.deg, args.nonrepeating)}\n"


def cmd_mu(args):
    mus = mu_invariants(parse_longitudes(_read(args.file)), args.order)
    return "".join(f"{i} : {lie_normalize(a)}\n" for i, a in mus.items())


def cmd_order(args):
    res = first_nonvanishing_order(parse_longitudes(_read(args.file)))
    if not res:
        return "AllVanish\n"
    n, mus = res
    return f"order {n}\n" + "".join(f"{i} : {lie_normalize(a)}\n" for i, a in mus.items())


def cmd_verify_mu(args):
    kind = GroupKind.parse(args.group)
    forest = parse_forest(_read(args.forest), args.order, args.labels, kind)
    res = verify_eta_identity(forest, parse_longitudes(_read(args.longitudes)))
    return "".join(f"{i} : {'true' if ok else 'false'}\n" for i, ok in res.items())


def cmd_int1_triple(args):
    d, q = int1_triple(parse_intersection_data(_read(args.file)))
    return f"d = {d}\nquotient = {q}\n"


def cmd_int1_quad(args):
    return _lattice_text(int1_quadruple(parse_intersection_data(_read(args.file))))


def cmd_int2_linear(args):
    return _lattice_text(int2_linear(parse_intersection_data(_read(args.file))))


def _quad_text(rep) -> str:
    lines = [
        f"bound: {rep.bound}",
        f"exhaustive: {'true' if rep.exhaustive else 'false'}",
        f"points: {len(rep.points)}",
        f"projection gcds: {rep.projection_gcds[0]} {rep.projection_gcds[1]}",
        f"projections complete within {rep.window}: "
        + " ".join("true" if c else "false" for c in rep.projection_complete),
        f"closure violations within {rep.window}: {len(rep.closure_violations)}",
    ]
    for p, q in rep.closure_violations[:20]:
        lines.append(f"  {p} + {q}")
    return "\n".join(lines) + "\n"


def cmd_int2_quad(args):
    data = parse_intersection_data(_read(args.file))
    rep = int2_quadratic_image(data, args.bound, args.budget, args.window)
    if args.format == "json":
        return report_json(rep)
    if args.format == "csv":
        return report_csv(rep)
    return _quad_text(rep)


def cmd_int2_member(args):
    data = parse_intersection_data(_read(args.file))
    ans = int2_membership((args.t1, args.t2), data, args.bound)
    if not ans:
        return f"unknown within bound {ans.bound}\n"
    lines = ["yes"]
    for p, v in ans.witness.items():
        lines.append(f"  x{''.join(map(str, p))} = {' '.join(map(str, v))}")
    return "\n".join(lines) + "\n"


def cmd_gcd_check(args):
    return "true\n" if gcd_pullapart_check(args.values) else "false\n"


# ------------------------------------------------------------------ parser


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="lambdatrees", description="Non-repeating intersection invariants.")
    sub = p.add_subparsers(dest="verb", required=True)

    def tree_flags(q):
        q.add_argument("--order", type=int)
        q.add_argument("--labels", type=int)
        q.add_argument("--group", default="trivial", help="trivial | zk:K | free:K")

    q = sub.add_parser("normalize", help="canonical coordinates of a forest or tree sum")
    tree_flags(q)
    q.add_argument("file")
    q.set_defaults(run=cmd_normalize)

    q = sub.add_parser("rank", help="rank of the order n group on m labels")
    q.add_argument("n", type=int)
    q.add_argument("m", type=int)
    q.set_defaults(run=cmd_rank)

    q = sub.add_parser("op", help="label operation: delta I | sigma I J | s I | e I")
    tree_flags(q)
    q.add_argument("which", choices=sorted(OPS))
    q.add_argument("i", type=int)
    q.add_argument("j", type=int, nargs="?")
    q.add_argument("file")
    q.set_defaults(run=cmd_op)

    q = sub.add_parser("eta", help="bracket read off from the i-leaves")
    tree_flags(q)
    q.add_argument("i", type=int)
    q.add_argument("file")
    q.set_defaults(run=cmd_eta)

    q = sub.add_parser("magnus", help="Magnus expansion of a word")
    q.add_argument("--deg", type=int, required=True)
    q.add_argument("--nonrepeating", action="store_true")
    q.add_argument("word", nargs="+")
    q.set_defaults(run=cmd_magnus)

    q = sub.add_parser("mu", help="order n non-repeating Milnor invariants")
    q.add_argument("--order", type=int, required=True)
    q.add_argument("file")
    q.set_defaults(run=cmd_mu)

    q = sub.add_parser("order", help="first order with a nonzero invariant")
    q.add_argument("file")
    q.set_defaults(run=cmd_order)

    q = sub.add_parser("verify-mu", help="compare eta of the forest with the Milnor invariants")
    tree_flags(q)
    q.add_argument("forest")
    q.add_argument("longitudes")
    q.set_defaults(run=cmd_verify_mu)

    for name, fn in (("int1-triple", cmd_int1_triple), ("int1-quad", cmd_int1_quad), ("int2-linear", cmd_int2_linear)):
        q = sub.add_parser(name)
        q.add_argument("file")
        q.set_defaults(run=fn)

    q = sub.add_parser("int2-quad", help="bounded image of the quadratic order-2 map")
    q.add_argument("--bound", type=int, required=True)
    q.add_argument("--budget", type=int, default=50_000_000)
    q.add_argument("--window", type=int)
    q.add_argument("--format", choices=("text", "json", "csv"), default="text")
    q.add_argument("file")
    q.set_defaults(run=cmd_int2_quad)

    q = sub.add_parser("int2-member", help="search for a point in the quadratic image")
    q.add_argument("--bound", type=int, required=True)
    q.add_argument("file")
    q.add_argument("t1", type=int)
    q.add_argument("t2", type=int)
    q.set_defaults(run=cmd_int2_member)

    q = sub.add_parser("gcd-check", help="gcd of sphere pairings equals 1")
    q.add_argument("values", type=int, nargs="+")
    q.set_defaults(run=cmd_gcd_check)
    return p


SWITCHES = {"--nonrepeating", "--help", "-h"}


def _options_first(argv):
    """Move option tokens ahead of the verb's positionals.

    argparse cannot split positionals around options when an optional
    positional (the J of ``op sigma I J FILE``) precedes a required one.
    """
    if not argv:
        return argv
    verb, rest = argv[0], list(argv[1:])
    opts, pos = [], []
    k = 0
    while k < len(rest):
        tok = rest[k]
        if tok.startswith("--") or tok in SWITCHES:
            opts.append(tok)
            if tok not in SWITCHES and "=" not in tok and k + 1 < len(rest):
                opts.append(rest[k + 1])
                k += 1
        else:
            pos.append(tok)
        k += 1
    return [verb] + opts + pos


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    argv = sys.argv[1:] if argv is None else list(argv)
    args = build_parser().parse_args(_options_first(argv))
    try:
        out = args.run(args)
    except ParseError as err:
        print(f"ParseError: {err}", file=stderr)
        return 2
    except LambdaTreesError as err:
        print(f"{type(err).__name__}: {err}", file=stderr)
        if getattr(err, "report", None) is not None and args.verb == "int2-quad":
            stdout.write(_quad_text(err.report))
        return 1
    except (OSError, ValueError) as err:
        print(f"{type(err).__name__}: {err}", file=stderr)
        return 1
    stdout.write(out)
    return 0


def main():
    sys.exit(run())
