"""Command-line driver.

Exit codes: 0 success, 1 verification failure or oracle mismatch,
2 usage/input error, 3 search budget exhausted.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction
from math import gcd
from typing import Optional, Sequence

from .coloring import (
    ColoringError,
    FatColoring,
    Rejection,
    coloring_from_dict,
    coloring_to_dict,
    format_rational,
    parse_rational,
    verify_fat,
)
from .families import FamilySpec, InvalidParams, generate
from .graph import structure_report
from .io import ParseError, format_edge_list, parse_graph_input
from .oracle import TooLarge, brute_force_oracle
from .poset import automorphism_classes, build_poset, to_dot
from .solver import (
    BudgetExhausted,
    SearchBudget,
    chi_fat,
    colorings_with,
    enumerate_all,
)
from .spectral import IsolatedVertex, max_nl_multiplicity, nl_multiplicity, pencil_polynomial

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _rational_arg(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--budget-nodes", type=int, default=None,
                        help="search node cap (default: $FATCOLOR_BUDGET_NODES or 10^7)")
    common.add_argument("--time-cap", type=float, default=None, help="wall-clock cap in seconds")
    common.add_argument("--workers", type=int, default=1, help="solver threads")

    parser = argparse.ArgumentParser(prog="fatcolor", description="Exact FAT coloring toolkit.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", parents=[common], help="write a family graph as an edge list")
    p.add_argument("family")
    p.add_argument("-o", "--output")

    p = sub.add_parser("verify", parents=[common], help="check a coloring JSON file")
    p.add_argument("graph")
    p.add_argument("coloring")

    p = sub.add_parser("chi", parents=[common], help="FAT chromatic number")
    p.add_argument("graph")
    p.add_argument("--witness", action="store_true")
    p.add_argument("--explain", action="store_true")

    p = sub.add_parser("enum", parents=[common], help="stream FAT colorings as JSON lines")
    p.add_argument("graph")
    p.add_argument("--k", type=int)
    p.add_argument("--alpha", type=_rational_arg)

    p = sub.add_parser("irreducible", parents=[common], help="stream irreducible colorings")
    p.add_argument("graph")
    p.add_argument("--up-to-automorphism", action="store_true",
                   help="one representative per automorphism class")

    p = sub.add_parser("hasse", parents=[common], help="coarsening order as a DOT digraph")
    p.add_argument("graph")
    p.add_argument("--dot", help="output path (default: stdout)")
    p.add_argument("--figure", help="also render the diagram to this image path")

    p = sub.add_parser("spectral", parents=[common], help="exact normalized Laplacian multiplicities")
    p.add_argument("graph")
    p.add_argument("--lambda", dest="lambdas", type=_rational_arg, action="append")

    p = sub.add_parser("oracle", parents=[common], help="compare solver with brute force")
    p.add_argument("graph")

    p = sub.add_parser("report", parents=[common], help="feasible (k, alpha) table")
    p.add_argument("graph")
    p.add_argument("--figures", metavar="DIR", help="write feasible.png and poset.png here")
    return parser


def _budget(args) -> SearchBudget:
    kw = {"workers": args.workers, "time_cap": args.time_cap}
    if args.budget_nodes is not None:
        kw["max_nodes"] = args.budget_nodes
    try:
        return SearchBudget.from_env(**kw)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _jsonl(fc: FatColoring) -> str:
    return json.dumps(coloring_to_dict(fc))


def _cmd_gen(args, out) -> int:
    spec = FamilySpec.parse(args.family)
    text = format_edge_list(generate(spec), comment=str(spec))
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        out.write(text)
    return EXIT_OK


def _cmd_verify(args, out) -> int:
    g, _ = parse_graph_input(args.graph)
    try:
        with open(args.coloring, encoding="utf-8") as fh:
            data = json.load(fh)
        c, alpha, beta = coloring_from_dict(data)
    except (OSError, json.JSONDecodeError, ColoringError, ValueError) as exc:
        out.write(f"INVALID {exc}\n")
        return EXIT_FAIL
    if c.n != g.n:
        out.write(f"INVALID coloring has n={c.n}, graph has n={g.n}\n")
        return EXIT_FAIL
    res = verify_fat(g, c)
    if isinstance(res, Rejection):
        out.write(f"{res}\n")
        return EXIT_FAIL
    if (alpha is not None and alpha != res.alpha) or (beta is not None and beta != res.beta):
        out.write(
            f"REJECT StatedParameters stated alpha={data.get('alpha')} beta={data.get('beta')} "
            f"verified alpha={format_rational(res.alpha)} beta={format_rational(res.beta)}\n"
        )
        return EXIT_FAIL
    out.write(f"FAT k={res.k} alpha={format_rational(res.alpha)} beta={format_rational(res.beta)}\n")
    return EXIT_OK


def _cmd_chi(args, out) -> int:
    g, _ = parse_graph_input(args.graph)
    res = chi_fat(g, _budget(args))
    out.write(f"{res.k}\n")
    if args.witness:
        out.write(_jsonl(res.witness) + "\n")
    if args.explain:
        for key in ("min_degree_plus_1", "degree_gcd_plus_1", "mu_plus_1", "upper", "alpha_zero_k"):
            if key in res.bounds_used:
                out.write(f"bound\t{key}\t{res.bounds_used[key]}\n")
        for k, reason in sorted(res.bounds_used.get("pruned", {}).items(), reverse=True):
            out.write(f"pruned\tk={k}\t{reason}\n")
        for k, alphas in sorted(res.bounds_used.get("tried", {}).items(), reverse=True):
            out.write(f"tried\tk={k}\t{' '.join(format_rational(a) for a in alphas)}\n")
    return EXIT_OK


def _cmd_enum(args, out) -> int:
    g, _ = parse_graph_input(args.graph)
    budget = _budget(args)
    if args.k is not None:
        if args.k < 1:
            raise UsageError("--k must be >= 1")
        found = colorings_with(g, args.k, args.alpha, budget)
    else:
        found = enumerate_all(g, budget)
        if args.alpha is not None:
            found = [fc for fc in found if fc.alpha == args.alpha]
    for fc in found:
        out.write(_jsonl(fc) + "\n")
    return EXIT_OK


def _cmd_irreducible(args, out) -> int:
    g, _ = parse_graph_input(args.graph)
    irr = build_poset(enumerate_all(g, _budget(args))).irreducibles()
    if args.up_to_automorphism:
        irr = [group[0] for group in automorphism_classes(g, irr)]
    for fc in irr:
        out.write(_jsonl(fc) + "\n")
    return EXIT_OK


def _cmd_hasse(args, out) -> int:
    g, _ = parse_graph_input(args.graph)
    p = build_poset(enumerate_all(g, _budget(args)))
    dot = to_dot(p)
    if args.dot:
        with open(args.dot, "w", encoding="utf-8") as fh:
            fh.write(dot)
    else:
        out.write(dot)
    if args.figure:
        from .plots import plot_poset

        plot_poset(p, args.figure, title=args.graph)
    return EXIT_OK


def _default_lambdas(g) -> list[Fraction]:
    rep = structure_report(g)
    values = {Fraction(0), Fraction(2)}
    divisors = [s for s in range(1, rep.degree_gcd + 1) if rep.degree_gcd % s == 0]
    for k in range(2, g.n + 1):
        for s in divisors:
            for r in range(1, s + 1):
                a = Fraction(r, s)
                if gcd(r, s) == 1 and a <= Fraction(1, k - 1):
                    values.add(k * a)
    return sorted(v for v in values if v <= 2)


def _cmd_spectral(args, out) -> int:
    g, _ = parse_graph_input(args.graph)
    poly = pencil_polynomial(g)
    mu = max_nl_multiplicity(g)
    out.write("pencil\t" + " ".join(str(c) for c in poly.coefficients) + "\n")
    out.write("lambda\tmultiplicity\n")
    queried = args.lambdas
    lambdas = sorted(set(queried)) if queried else _default_lambdas(g)
    for lam in lambdas:
        mult = nl_multiplicity(g, lam)
        if queried or mult:
            out.write(f"{format_rational(lam)}\t{mult}\n")
    out.write(f"mu\t{mu}\n")
    return EXIT_OK


def _cmd_oracle(args, out) -> int:
    g, _ = parse_graph_input(args.graph)
    truth = brute_force_oracle(g)
    found = enumerate_all(g, _budget(args))
    a = {fc.assignment: fc for fc in truth}
    b = {fc.assignment: fc for fc in found}
    if a.keys() == b.keys() and all(a[x] == b[x] for x in a):
        out.write(f"OK {len(truth)} colorings\n")
        return EXIT_OK
    out.write(f"MISMATCH oracle={len(truth)} solver={len(found)}\n")
    for key in sorted(a.keys() - b.keys()):
        out.write("only-oracle\t" + _jsonl(a[key]) + "\n")
    for key in sorted(b.keys() - a.keys()):
        out.write("only-solver\t" + _jsonl(b[key]) + "\n")
    return EXIT_FAIL


def _cmd_report(args, out) -> int:
    g, _ = parse_graph_input(args.graph)
    p = build_poset(enumerate_all(g, _budget(args)))
    maximal = set(p.maximal)
    rows = {}
    for i, fc in enumerate(p.elements):
        key = (fc.k, fc.alpha)
        count, irr, beta = rows.get(key, (0, False, fc.beta))
        rows[key] = (count + 1, irr or i in maximal, beta)
    out.write("k\talpha\tbeta\tcolorings\tirreducible\n")
    table = []
    for (k, alpha), (count, irr, beta) in sorted(rows.items()):
        out.write(f"{k}\t{format_rational(alpha)}\t{format_rational(beta)}\t{count}\t{int(irr)}\n")
        table.append((k, alpha, count, irr))
    if args.figures:
        from .plots import plot_feasible, plot_poset

        os.makedirs(args.figures, exist_ok=True)
        plot_feasible(table, os.path.join(args.figures, "feasible.png"), title=args.graph)
        plot_poset(p, os.path.join(args.figures, "poset.png"), title=args.graph)
    return EXIT_OK


COMMANDS = {
    "gen": _cmd_gen,
    "verify": _cmd_verify,
    "chi": _cmd_chi,
    "enum": _cmd_enum,
    "irreducible": _cmd_irreducible,
    "hasse": _cmd_hasse,
    "spectral": _cmd_spectral,
    "oracle": _cmd_oracle,
    "report": _cmd_report,
}


def run(args: argparse.Namespace, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        _budget(args)
        return COMMANDS[args.command](args, out)
    except BudgetExhausted as exc:
        err.write(f"budget exhausted: {exc}\n")
        if exc.lower is not None:
            err.write(f"chi_fat lower bound {exc.lower}, unproven upper bound {exc.upper}\n")
        return EXIT_BUDGET
    except (UsageError, InvalidParams, ParseError, IsolatedVertex, TooLarge) as exc:
        err.write(f"error: {exc}\n")
        return EXIT_USAGE


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    return run(args)


if __name__ == "__main__":
    sys.exit(main())
