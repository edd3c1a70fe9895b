"""Command-line surface.

Verdict-bearing commands are scriptable: `soltes` exits 0 when the
hypergraph is deletion invariant, 1 when it is not, 2 on any error.
`--jobs` (or the env var SOLTES_JOBS) caps worker threads.
"""

from __future__ import annotations

import argparse
import os
import sys

from . import families, formats, screen as screen_mod, search as search_mod
from .hypergraph import dual as dual_op
from .metrics import delta_report, wiener


def _build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="soltes",
        description="Hypergraph total-distance toolkit",
    )
    p.add_argument("--jobs", type=int, default=None,
                   help="worker threads (default: env SOLTES_JOBS or 1)")
    sub = p.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("wiener", help="total distance of a .hg file")
    sp.add_argument("file")

    sp = sub.add_parser("soltes",
                        help="per-vertex deletion deltas and verdict")
    sp.add_argument("file")

    sp = sub.add_parser("construct", help="build a named family instance")
    sp.add_argument("family", help="one of: " + ", ".join(families.family_names()))
    sp.add_argument("params", nargs="*", type=int)
    sp.add_argument("--seed", type=int, default=None)
    sp.add_argument("-o", "--output", default=None, help="output .hg file")

    sp = sub.add_parser("dual", help="dual hypergraph of a .hg file")
    sp.add_argument("file")
    sp.add_argument("-o", "--output", required=True)

    sp = sub.add_parser("g6", help="decode one graph6 record to .hg")
    sp.add_argument("record", help="graph6 string, or a file containing one")
    sp.add_argument("-o", "--output", default=None)

    sp = sub.add_parser("screen", help="screen a graph6 census file")
    sp.add_argument("file")
    sp.add_argument("--transform", choices=("star", "triangle"), required=True)
    sp.add_argument("-o", "--output", default=None, help="output .csv file")

    sp = sub.add_parser("search", help="exhaustive searches")
    ssub = sp.add_subparsers(dest="search_command", required=True)
    so = ssub.add_parser("order", help="all hypergraphs of a given order")
    so.add_argument("n", type=int)
    ssub.add_parser("size5", help="all hypergraphs of size 5")
    sd = ssub.add_parser("diam1-3unif",
                         help="3-uniform diameter-1 hypergraphs up to order n")
    sd.add_argument("n", type=int)
    return p


def _emit(h, output):
    text = formats.write_hg(h)
    if output:
        formats.write_hg_file(h, output)
    else:
        sys.stdout.write(text)


def _jobs(args) -> int:
    if args.jobs is not None:
        return max(1, args.jobs)
    return search_mod.default_jobs()


def _print_report(rep: search_mod.SearchReport) -> None:
    k = len(rep.witnesses)
    print(f"domain: {rep.domain}")
    print(f"examined {rep.examined} candidates in {rep.elapsed:.2f}s")
    plural = "es" if k != 1 else ""
    unique = " (unique up to isomorphism)" if k == 1 else ""
    print(f"{k} witness{plural}{unique}")
    for w in rep.witnesses:
        sys.stdout.write(formats.write_hg(w))


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        if args.command == "wiener":
            w = wiener(formats.read_hg(args.file))
            print("inf" if w is None else w)
            return 0

        if args.command == "soltes":
            rep = delta_report(formats.read_hg(args.file), jobs=_jobs(args))
            print(f"W = {'inf' if rep.w is None else rep.w}")
            print("v  W(H\\v)  delta")
            for r in rep.rows:
                wm = "inf" if r.w_minus is None else r.w_minus
                d = "-" if r.delta is None else r.delta
                print(f"{r.v}  {wm}  {d}")
            print(f"verdict: {'soltes' if rep.verdict else 'not soltes'}")
            return 0 if rep.verdict else 1

        if args.command == "construct":
            spec = families.FamilySpec(
                args.family, tuple(args.params), seed=args.seed
            )
            _emit(families.build(spec), args.output)
            return 0

        if args.command == "dual":
            _emit(dual_op(formats.read_hg(args.file)), args.output)
            return 0

        if args.command == "g6":
            rec = args.record
            if os.path.exists(rec):
                with open(rec, "r", encoding="ascii") as fh:
                    rec = fh.read()
            _emit(formats.parse_graph6(rec), args.output)
            return 0

        if args.command == "screen":
            transform = args.transform + "_dual"
            rows = screen_mod.screen_file(args.file, transform, jobs=_jobs(args))
            csv_text = screen_mod.rows_to_csv(rows)
            if args.output:
                with open(args.output, "w", encoding="ascii", newline="\n") as fh:
                    fh.write(csv_text)
            else:
                sys.stdout.write(csv_text)
            print(screen_mod.summarize(rows))
            return 0

        if args.command == "search":
            if args.search_command == "order":
                rep = search_mod.search_by_order(args.n, jobs=_jobs(args))
            elif args.search_command == "size5":
                rep = search_mod.search_size5()
            else:
                rep = search_mod.check_3uniform_diam1(args.n, jobs=_jobs(args))
            _print_report(rep)
            return 0
    except (ValueError, OSError, RuntimeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return 2  # pragma: no cover


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
