"""Command-line front end.

Exit codes: 0 on success, 1 on a usage or input error, 2 when two
independent computations disagree.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Optional

from . import poly, verify
from .crystal import (
    f,
    f_prime,
    generate_Bn,
    generate_ssyt,
    generate_svt,
)
from .exceptions import (
    InfeasibleShape,
    MismatchError,
    OracleGuard,
    ParseError,
    SizeGuardExceeded,
    TableauError,
    TooFewVariables,
)
from .starkeys import in_atom, right_key_oracle, right_key_svt
from .tableaux import (
    SetValuedTableau,
    canonical_order,
    composition,
    support,
)

EXIT_USAGE = 1
EXIT_MISMATCH = 2

DEFAULT_TABLEAU_LIMIT = 10**5
DEFAULT_NODE_LIMIT = 10**4


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def parse_composition(text: str) -> tuple[int, ...]:
    try:
        values = [int(v) for v in text.split(",") if v.strip() != ""]
    except ValueError:
        raise ParseError(f"not a comma-separated list of integers: {text!r}")
    if any(v < 0 for v in values):
        raise ParseError(f"composition entries must be non-negative: {text!r}")
    return composition(values)


def parse_partition(text: str) -> tuple[int, ...]:
    values = parse_composition(text)
    if any(v == 0 for v in values) or list(values) != sorted(values, reverse=True):
        raise ParseError(f"not a partition: {text!r}")
    return values


def parse_indices(text: str) -> list[int]:
    try:
        out = [int(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise ParseError(f"not a list of operator indices: {text!r}")
    if any(v < 1 for v in out):
        raise ParseError(f"operator indices start at 1: {text!r}")
    return out


def render(p: poly.Polynomial, fmt: str) -> str:
    if fmt == "latex":
        return p.to_latex()
    if fmt == "json":
        return p.to_json()
    return str(p)


def _num_vars(alpha, n):
    if n is None:
        return max(support(alpha), 1)
    if n < support(alpha):
        raise TooFewVariables(f"--n {n} is smaller than support({','.join(map(str, alpha))}) = {support(alpha)}")
    return n


def _compare(name, first, second):
    if first != second:
        raise MismatchError(f"{name}: operator route gives {first}, tableau route gives {second}")


# ---------------------------------------------------------------------------
# subcommands


def cmd_lascoux(args, out):
    alpha = args.alpha
    n = _num_vars(alpha, args.n)
    operator = svt = None
    if args.method in ("operator", "both"):
        operator = poly.lascoux(alpha, n)
    if args.method in ("svt", "both"):
        svt = poly.generating_function(generate_svt(alpha), n)
    if operator is not None and svt is not None:
        _compare(f"lascoux{alpha}", operator, svt)
    print(render(operator if operator is not None else svt, args.format), file=out)


def cmd_key(args, out):
    alpha = args.alpha
    n = _num_vars(alpha, args.n)
    operator = svt = None
    if args.method in ("operator", "both"):
        operator = poly.key_poly(alpha, n)
    if args.method in ("svt", "both"):
        svt = poly.generating_function(generate_ssyt(alpha), n)
    if operator is not None and svt is not None:
        _compare(f"key{alpha}", operator, svt)
    print(render(operator if operator is not None else svt, args.format), file=out)


def cmd_atom(args, out):
    alpha = args.alpha
    n = _num_vars(alpha, args.n)
    operator = svt = None
    if args.method in ("operator", "both"):
        operator = poly.atom(alpha, n)
    if args.method in ("svt", "both"):
        svt = poly.generating_function((T for T in generate_svt(alpha) if in_atom(T, alpha)), n)
    if operator is not None and svt is not None:
        _compare(f"atom{alpha}", operator, svt)
    print(render(operator if operator is not None else svt, args.format), file=out)


def cmd_grothendieck(args, out):
    if args.lam is None:
        raise UsageError("grothendieck needs --lambda")
    lam = args.lam
    n = args.n if args.n is not None else max(len(lam), 1)
    operator = svt = None
    if args.method in ("svt", "both"):
        svt = poly.grothendieck(lam, n)
    if args.method in ("operator", "both"):
        operator = poly.lascoux(poly.increasing_rearrangement(lam, n), n)
    if operator is not None and svt is not None:
        _compare(f"grothendieck{lam}", operator, svt)
    print(render(svt if svt is not None else operator, args.format), file=out)


def cmd_svt(args, out):
    alpha = args.alpha
    if args.atoms and args.ssyt:
        raise UsageError("--atoms and --ssyt are exclusive")
    if args.ssyt:
        tableaux = generate_ssyt(alpha)
    else:
        tableaux = generate_svt(alpha)
        if args.atoms:
            tableaux = {T for T in tableaux if in_atom(T, alpha)}
    if len(tableaux) > args.limit:
        raise SizeGuardExceeded(f"{len(tableaux)} tableaux exceed --limit {args.limit}")
    if args.count:
        print(len(tableaux), file=out)
        return
    for T in canonical_order(tableaux):
        print(T.to_json(), file=out)


def _read_tableau(args) -> SetValuedTableau:
    text = args.tableau if args.tableau is not None else sys.stdin.read()
    try:
        return SetValuedTableau.from_json(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"tableau is not valid JSON: {exc}")


def cmd_rightkey(args, out):
    T = _read_tableau(args)
    key = right_key_svt(T)
    if args.oracle:
        _compare("right key", key, right_key_oracle(T))
    if args.format == "plain":
        print(str(key), file=out)
    else:
        print(key.to_json(), file=out)


def crystal_graph(nodes, indices):
    """Edges ``(source, target, i, style)`` among ``nodes``; solid for ``f_i``, dashed for ``f_i'``."""
    node_set = set(nodes)
    edges = []
    for T in nodes:
        for i in indices:
            for op, style in ((f, "solid"), (f_prime, "dashed")):
                Y = op(T, i)
                if Y is not None and Y in node_set:
                    edges.append((T, Y, i, style))
    return edges


def to_dot(nodes, edges) -> str:
    ordered = canonical_order(nodes)
    ids = {T: k for k, T in enumerate(ordered)}
    lines = ["digraph crystal {", "  node [shape=box, fontname=monospace];"]
    for T in ordered:
        label = json.dumps(T.to_json())
        lines.append(f"  n{ids[T]} [label={label}];")
    for T, Y, i, style in sorted(edges, key=lambda e: (ids[e[0]], ids[e[1]], e[2], e[3])):
        lines.append(f'  n{ids[T]} -> n{ids[Y]} [label="{i}", style={style}];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def cmd_crystal(args, out):
    if args.alpha is not None:
        alpha = args.alpha
        nodes = generate_svt(alpha)
        n = max(support(alpha), 1)
    elif args.lam is not None:
        n = args.n if args.n is not None else max(len(args.lam), 1)
        nodes = generate_Bn(args.lam, n, limit=args.limit + 1)
    else:
        raise UsageError("crystal needs --alpha or --lambda")
    if len(nodes) > args.limit:
        raise SizeGuardExceeded(f"{len(nodes)} nodes exceed --limit {args.limit}")
    indices = args.i if args.i is not None else list(range(1, n))
    dot = to_dot(nodes, crystal_graph(nodes, indices))
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(dot)
    else:
        out.write(dot)


def cmd_verify(args, out):
    fprime = verify.faulty_f_prime if args.inject_fault else None
    failed = False
    for name, failures in verify.run_all(args.max_support, args.max_entry, args.max_n, fprime=fprime):
        status = "PASS" if not failures else "FAIL"
        print(f"{status} {name}", file=out)
        for msg in failures[:5]:
            print(f"    {msg}", file=out)
        failed = failed or bool(failures)
    if failed:
        raise MismatchError("verification failed")


COMMANDS = {
    "lascoux": cmd_lascoux,
    "key": cmd_key,
    "atom": cmd_atom,
    "grothendieck": cmd_grothendieck,
    "svt": cmd_svt,
    "rightkey": cmd_rightkey,
    "crystal": cmd_crystal,
    "verify": cmd_verify,
}


def _composition_arg(text):
    try:
        return parse_composition(text)
    except ParseError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _partition_arg(text):
    try:
        return parse_partition(text)
    except ParseError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _indices_arg(text):
    try:
        return parse_indices(text)
    except ParseError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="lascoux", description="Lascoux polynomials and set-valued tableaux.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(p, alpha=True, lam=False):
        if alpha:
            p.add_argument("--alpha", type=_composition_arg, required=not lam, help="weak composition, e.g. 1,0,2")
        if lam:
            p.add_argument("--lambda", dest="lam", type=_partition_arg, help="partition, e.g. 2,1")
        p.add_argument("--n", type=int, help="number of x variables")
        p.add_argument("--format", choices=("plain", "latex", "json"), default="plain")

    for name in ("lascoux", "key", "atom"):
        p = sub.add_parser(name)
        common(p)
        p.add_argument("--method", choices=("operator", "svt", "both"), default="operator")

    p = sub.add_parser("grothendieck")
    common(p, alpha=False, lam=True)
    p.add_argument("--method", choices=("operator", "svt", "both"), default="svt")

    p = sub.add_parser("svt", help="enumerate SVT(alpha), its atom set, or SSYT(alpha)")
    p.add_argument("--alpha", type=_composition_arg, required=True)
    p.add_argument("--atoms", action="store_true")
    p.add_argument("--ssyt", action="store_true")
    p.add_argument("--count", action="store_true")
    p.add_argument("--limit", type=int, default=DEFAULT_TABLEAU_LIMIT)

    p = sub.add_parser("rightkey", help="right key of a tableau given as JSON (argument or stdin)")
    p.add_argument("--tableau", help='e.g. {"shape":[2,1],"cells":[[[1],[2,3]],[[3]]]}')
    p.add_argument("--oracle", action="store_true", help="cross-check against the brute-force oracle")
    p.add_argument("--format", choices=("plain", "json"), default="json")

    p = sub.add_parser("crystal", help="write the crystal graph as DOT")
    common(p, lam=True)
    p.add_argument("--i", type=_indices_arg, help="operator indices, e.g. 2 or 1,2")
    p.add_argument("--out", help="output path (default stdout)")
    p.add_argument("--limit", type=int, default=DEFAULT_NODE_LIMIT)

    p = sub.add_parser("verify", help="run the bounded self-checks")
    p.add_argument("--max-support", type=int, default=3)
    p.add_argument("--max-entry", type=int, default=3)
    p.add_argument("--max-n", type=int, default=4)
    p.add_argument("--inject-fault", action="store_true", help=argparse.SUPPRESS)
    return parser


def main(argv: Optional[list[str]] = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        COMMANDS[args.command](args, out)
    except MismatchError as exc:
        print(f"mismatch: {exc}", file=sys.stderr)
        return EXIT_MISMATCH
    except (UsageError, ParseError, InfeasibleShape, TableauError, TooFewVariables, SizeGuardExceeded, OracleGuard) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return 0


def main_entry():
    sys.exit(main())


if __name__ == "__main__":
    main_entry()
