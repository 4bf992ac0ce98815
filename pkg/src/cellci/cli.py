"""Command-line interface.

Exit codes: 0 success, 1 a mathematical check failed, 2 usage or input
error, 3 Gröbner budget exhausted.
"""

from __future__ import annotations

import argparse
import sys

from cellci.decide import TheoremViolation, check_theorem_exhaustive, verify_algebraically
from cellci.enumeration import enumerate_connected
from cellci.groebner import DEFAULT_BUDGET, BudgetExhausted, groebner_for, initial_ideal, monomial_ideal_height
from cellci.ideal import format_monomial, generators, mu
from cellci.io import CellsParseError, read_cells, render_ascii, serialize_cells, to_json

EXIT_OK, EXIT_VIOLATION, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3


def _load(path):
    try:
        return read_cells(path)
    except OSError as exc:
        raise _UsageError(f"cannot read {path}: {exc.strerror or exc}") from None
    except CellsParseError as exc:
        raise _UsageError(f"{path}: {exc}") from None


class _UsageError(Exception):
    pass


def cmd_decide(args) -> int:
    C = _load(args.file)
    rep = verify_algebraically(C, budget=args.budget)
    if args.json:
        sys.stdout.write(to_json(rep.to_dict(include_timings=args.timings)))
    else:
        ht = "unknown (budget exhausted)" if rep.height is None else rep.height
        print(f"rank {rep.rank}, vertices {rep.vertices}, mu {rep.mu}, height {ht}")
        print(f"chessboard: {'yes' if rep.is_chessboard else 'no'}")
        print("complete intersection" if rep.is_ci else "NOT a complete intersection")
        cert = rep.certificate
        if cert.witness:
            A, B = cert.witness
            print(
                f"witness: cells ({A.lower_left.i},{A.lower_left.j}) and "
                f"({B.lower_left.i},{B.lower_left.j}) share an edge; "
                f"mu = {cert.mu} > {cert.height_bound} = |C| >= height"
            )
        elif cert.leading_terms:
            print("pairwise coprime leading terms: " + ", ".join(format_monomial(m) for m in cert.leading_terms))
        if rep.status != "verified":
            print(f"status: {rep.status}")
    if rep.status == "violation":
        return EXIT_VIOLATION
    if rep.status == "unverified":
        return EXIT_BUDGET
    return EXIT_OK


def cmd_generators(args) -> int:
    C = _load(args.file)
    gens = [str(g) for g in generators(C).generators]
    if args.json:
        sys.stdout.write(to_json({"mu": len(gens), "generators": gens}))
    else:
        for g in gens:
            print(g)
    return EXIT_OK


def cmd_groebner(args) -> int:
    C = _load(args.file)
    G = groebner_for(C, args.order, args.budget)
    if args.json:
        lines = G.dump().splitlines()
        init = [format_monomial(m) for m in initial_ideal(G)] if C.cells else []
        sys.stdout.write(to_json({
            "order": f"lex({args.order})",
            "basis": lines,
            "initial_ideal": init,
            "spairs_processed": G.spairs_processed,
            "budget": args.budget,
        }))
    else:
        sys.stdout.write(G.dump())
    return EXIT_OK


def cmd_height(args) -> int:
    C = _load(args.file)
    h = monomial_ideal_height(initial_ideal(groebner_for(C, args.order, args.budget))) if C.cells else 0
    if args.json:
        sys.stdout.write(to_json({"height": h, "rank": C.rank, "order": f"lex({args.order})"}))
    else:
        print(h)
    return EXIT_OK


def cmd_mu(args) -> int:
    C = _load(args.file)
    m = mu(C)
    if args.json:
        sys.stdout.write(to_json({"mu": m, "rank": C.rank}))
    else:
        print(m)
    return EXIT_OK


def cmd_enumerate(args) -> int:
    if args.max_rank < 1:
        raise _UsageError("--max-rank must be at least 1")
    if not args.check_theorem:
        for form in enumerate_connected(args.max_rank, d4=args.d4):
            print(serialize_cells(form, one_line=True))
        return EXIT_OK
    try:
        summary = check_theorem_exhaustive(
            args.max_rank, disconnected=not args.connected_only, workers=args.workers,
            instances=list(enumerate_connected(args.max_rank, d4=True)) if args.d4 else None,
        )
    except TheoremViolation as exc:
        print(f"VIOLATION: {exc}", file=sys.stderr)
        return EXIT_VIOLATION
    if args.json:
        sys.stdout.write(to_json(summary.to_dict()))
    else:
        print(f"{summary.instances} collections checked, {summary.violations} violations")
        print("rank  total  CI  not-CI  disconnected  height==rank")
        for r, row in sorted(summary.counts.items()):
            print(f"{r:4d}  {row['total']:5d}  {row['ci']:3d}  {row['not_ci']:6d}  "
                  f"{row['disconnected']:12d}  {row['height_eq_rank']:12d}")
        if summary.conjecture_deviations:
            print(f"height != rank on {len(summary.conjecture_deviations)} collections:")
            for f in summary.conjecture_deviations:
                print("  " + serialize_cells(f, one_line=True))
    return EXIT_OK


def cmd_render(args) -> int:
    C = _load(args.file)
    sys.stdout.write(render_ascii(C, ascii_only=args.ascii))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cellci",
        description="Complete-intersection analysis of inner 2-minor ideals of collections of cells.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help, with_file=True, with_order=False, with_budget=False):
        p = sub.add_parser(name, help=help)
        if with_file:
            p.add_argument("file", help="cells file (one 'i j' lower-left corner per line)")
        if with_order:
            p.add_argument("--order", choices=("snake", "rowmajor"), default="snake")
        if with_budget:
            p.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="cap on processed S-pairs")
        p.add_argument("--json", action="store_true", help="machine-readable output")
        p.set_defaults(func=func)
        return p

    p = add("decide", cmd_decide, "decide the complete-intersection property", with_budget=True)
    p.add_argument("--timings", action="store_true", help="include timings in the JSON report")
    add("generators", cmd_generators, "list the inner 2-minors")
    add("groebner", cmd_groebner, "reduced Gröbner basis", with_order=True, with_budget=True)
    add("height", cmd_height, "height of the inner 2-minor ideal", with_order=True, with_budget=True)
    add("mu", cmd_mu, "minimal number of generators")
    p = add("enumerate", cmd_enumerate, "enumerate weakly connected collections", with_file=False)
    p.add_argument("--max-rank", type=int, required=True)
    p.add_argument("--check-theorem", action="store_true",
                   help="check chessboard <=> mu == height on every enumerated collection")
    p.add_argument("--connected-only", action="store_true", help="skip disconnected pairs in the check")
    p.add_argument("--d4", action="store_true", help="one representative per rotation/reflection class")
    p.add_argument("--workers", type=int, default=1)
    p = add("render", cmd_render, "draw the collection")
    p.add_argument("--ascii", action="store_true", help="use '#' and '.' only")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BudgetExhausted as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET


if __name__ == "__main__":
    sys.exit(main())
