"""Command-line front end.

Exit codes: 0 success, 1 usage, 2 parse error, 3 precondition violated,
4 verification failed, 5 internal assertion (including harness counterexamples).
"""

from __future__ import annotations

import argparse
import os
import sys

from .errors import InternalError, ParseError, RaagColorError, VerificationError
from .graph import (guess_format, min_coloring_oracle, parse_coloring, parse_graph,
                    random_graph, serialize_coloring, serialize_graph)
from .homomorphism import parse_hom, serialize_hom, verify_h1_iso, verify_homomorphism
from .instances import BenchConfig, bench
from .reduction import (CSV_HEADER, WORKERS_ENV, HarnessConfig, coloring_to_surjection,
                        equivalence_harness, surjection_to_coloring)


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path) as fh:
            return fh.read()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from None


def _load_graph(path, fmt):
    text = _read(path)
    return parse_graph(text, fmt or guess_format(text))


def cmd_chromatic(args, out):
    g = _load_graph(args.graph, args.format)
    kmax = args.kmax if args.kmax is not None else max(g.vertex_count, 1)
    c = min_coloring_oracle(g, kmax)
    if c is None:
        out.write(f"none <= {kmax}\n")
        return 0
    out.write(f"{c.color_count}\n")
    out.write(serialize_coloring(c, g))
    return 0


def cmd_build(args, out):
    g = _load_graph(args.graph, args.format)
    c = parse_coloring(_read(args.coloring), g)
    out.write(serialize_hom(coloring_to_surjection(g, c)))
    return 0


def cmd_extract(args, out):
    h = parse_hom(_read(args.hom))
    out.write(serialize_coloring(surjection_to_coloring(h)))
    return 0


def cmd_verify(args, out):
    h = parse_hom(_read(args.hom))
    check = verify_homomorphism(h)
    iso = verify_h1_iso(h)
    out.write(f"hom: {'PASS' if check.ok else 'FAIL'}\n")
    out.write(f"h1-iso: {'PASS' if iso else 'FAIL'}\n")
    if not check.ok:
        sys.stderr.write("non-commuting edges: "
                         + " ".join(f"{u}-{v}" for u, v in check.bad_edges) + "\n")
    return 0 if check.ok and iso else VerificationError.exit_code


def cmd_harness(args, out):
    cfg = HarnessConfig(n_max=args.nmax, k_min=args.kmin, k_max=args.kmax,
                        include_smaller=args.all_sizes,
                        workers=int(os.environ.get(WORKERS_ENV, "1")))
    reports = equivalence_harness(config=cfg)
    out.write(CSV_HEADER + "\n")
    for r in reports:
        out.write(r.csv_row() + "\n")
    bad = sum(not r.agrees for r in reports)
    out.write(f"counterexamples: {bad}\n")
    return 0 if bad == 0 else InternalError.exit_code


def cmd_bench(args, out):
    try:
        sizes = tuple(int(s) for s in args.sizes.split(","))
    except ValueError:
        raise ParseError(f"bad --sizes {args.sizes!r}") from None
    cfg = BenchConfig(sizes=sizes, colors=args.colors, edge_probability=args.p,
                      moves=args.moves, repeats=args.repeats, seed=args.seed)
    out.write("n,median_seconds,max_word_length\n")
    for n, med, longest in bench(cfg):
        out.write(f"{n},{med:.6f},{longest}\n")
    return 0


def cmd_gen(args, out):
    out.write(serialize_graph(random_graph(args.n, args.p, args.seed), args.format or "edge-list"))
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="raagcolor", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)
    fmt = dict(choices=("edge-list", "dimacs"), default=None,
               help="graph file format (guessed when omitted)")

    s = sub.add_parser("chromatic", help="chromatic number and a witness coloring")
    s.add_argument("graph")
    s.add_argument("--kmax", type=int)
    s.add_argument("--format", **fmt)
    s.set_defaults(func=cmd_chromatic)

    s = sub.add_parser("build", help="homomorphism built from a coloring")
    s.add_argument("graph")
    s.add_argument("coloring")
    s.add_argument("--format", **fmt)
    s.set_defaults(func=cmd_build)

    s = sub.add_parser("extract", help="coloring extracted from a homomorphism")
    s.add_argument("hom")
    s.set_defaults(func=cmd_extract)

    s = sub.add_parser("verify", help="check edge relations and the H1 condition")
    s.add_argument("hom")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("harness", help="exhaustive small-graph equivalence run")
    s.add_argument("--nmax", type=int, default=5)
    s.add_argument("--kmin", type=int, default=1)
    s.add_argument("--kmax", type=int, default=5)
    s.add_argument("--all-sizes", action="store_true",
                   help="also enumerate graphs with fewer than nmax vertices")
    s.set_defaults(func=cmd_harness)

    s = sub.add_parser("bench", help="extraction timings on scrambled instances")
    s.add_argument("--sizes", default="20,40,80")
    s.add_argument("--colors", type=int, default=4)
    s.add_argument("--p", type=float, default=0.15)
    s.add_argument("--moves", type=int, default=50)
    s.add_argument("--repeats", type=int, default=5)
    s.add_argument("--seed", type=int, default=2024)
    s.set_defaults(func=cmd_bench)

    s = sub.add_parser("gen", help="random G(n, p) graph")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--p", type=float, required=True)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--format", **fmt)
    s.set_defaults(func=cmd_gen)
    return p


def main(argv=None, out=None) -> int:
    args = build_parser().parse_args(argv)
    out = out if out is not None else sys.stdout
    try:
        return args.func(args, out)
    except VerificationError as exc:
        if exc.h1_failed:
            sys.stderr.write(f"H1: FAIL: {exc}\n")
        else:
            sys.stderr.write("hom: FAIL edges: "
                             + " ".join(f"{u}-{v}" for u, v in exc.bad_edges) + "\n")
        return exc.exit_code
    except RaagColorError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return exc.exit_code


if __name__ == "__main__":
    sys.exit(main())
