"""
Command-line front end.

    hypershadow gen bowtie --t 8 [--convention as_printed]
    hypershadow gen octahedron --variant red
    hypershadow gen star --eta 3 --k 3
    hypershadow gen windmill --eta 3 --k 2
    hypershadow gen random --n 8 --m 6 --k 3 --seed 1
    hypershadow eigen FILE [--shadow]
    hypershadow compare FILE
    hypershadow scan bowtie --t-min 0 --t-max 12
    hypershadow scan delta --k 3 --eta 3 100 1000
    hypershadow verify FILE

FILE may be ``-`` for standard input.  Exit status: 0 success, 1 a verify
check failed, 2 usage error, 3 parse error, 4 validation error (including
disconnected input), 5 no convergence.  An unreadable input
file exits with 3.
"""

from __future__ import annotations

import argparse
import sys

from .checks import verify_instance
from .errors import DisconnectedInput, NoConvergence, ParseError, ValidationError
from .generators import (
    hyperstar,
    modified_octahedron,
    pleated_bowtie,
    random_connected_kgraph,
    windmill,
)
from .hypergraph import clique_shadow
from .ranking import DEFAULT_TIE_TOLERANCE, bowtie_scan, compare, delta_scan
from .spectral import SolverConfig, principal_eigenpair_graph, principal_eigenpair_hyper
from .textio import dumps, format_hypergraph, format_multigraph, parse_hypergraph, render_eigenpair, render_report

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_PARSE = 3
EXIT_VALIDATION = 4
EXIT_NO_CONVERGENCE = 5


def _solver_flags() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--tol", type=float, default=1e-12, help="relative eigenvalue bracket width")
    p.add_argument("--max-iters", type=int, default=100_000)
    p.add_argument("--shift", type=float, default=1.0)
    p.add_argument("--tie-tol", type=float, default=DEFAULT_TIE_TOLERANCE)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", help="write output here instead of stdout")
    return p


def build_parser() -> argparse.ArgumentParser:
    common = _solver_flags()
    parser = argparse.ArgumentParser(
        prog="hypershadow",
        description="Compare hypergraph and clique-shadow eigenvector centrality.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="write a named family as an edge list")
    fam = gen.add_subparsers(dest="family", required=True)
    p = fam.add_parser("bowtie", parents=[common])
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--convention", choices=["eigenconsistent", "as_printed"], default="eigenconsistent")
    p = fam.add_parser("octahedron", parents=[common])
    p.add_argument("--variant", choices=["red", "blue", "blue_as_printed"], default="red")
    p = fam.add_parser("star", parents=[common])
    p.add_argument("--eta", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p = fam.add_parser("windmill", parents=[common])
    p.add_argument("--eta", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p = fam.add_parser("random", parents=[common])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--k", type=int, required=True)

    p = sub.add_parser("eigen", parents=[common], help="principal eigenpair of one instance")
    p.add_argument("file")
    p.add_argument("--shadow", action="store_true", help="solve the clique-shadow instead")

    p = sub.add_parser("compare", parents=[common], help="hypergraph vs clique-shadow report")
    p.add_argument("file")

    p = sub.add_parser("verify", parents=[common], help="run the invariant suite on one instance")
    p.add_argument("file")

    scan = sub.add_parser("scan", help="parameter scans")
    kind = scan.add_subparsers(dest="scan", required=True)
    p = kind.add_parser("bowtie", parents=[common])
    p.add_argument("--t-min", type=int, default=0)
    p.add_argument("--t-max", type=int, required=True)
    p.add_argument("--convention", choices=["eigenconsistent", "as_printed"], default="eigenconsistent")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--format", choices=["json", "tsv"], default="json")
    p = kind.add_parser("delta", parents=[common])
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--eta", type=int, nargs="+", required=True)
    p.add_argument("--validate-upto", type=int, default=50)
    p.add_argument("--format", choices=["json", "tsv"], default="json")
    return parser


def _config(args) -> SolverConfig:
    return SolverConfig(tolerance=args.tol, max_iterations=args.max_iters, shift=args.shift)


def _read(path: str) -> tuple[str, str]:
    if path == "-":
        return sys.stdin.read(), "<stdin>"
    with open(path, encoding="utf-8") as fh:
        return fh.read(), path


def _tsv(rows: list[dict]) -> str:
    if not rows:
        return ""
    cols = list(rows[0])

    def cell(v):
        if v is None:
            return ""
        if isinstance(v, list):
            return ",".join(v)
        if isinstance(v, float):
            return f"{v:.17g}"
        return str(v)

    lines = ["\t".join(cols)] + ["\t".join(cell(r[c]) for c in cols) for r in rows]
    return "\n".join(lines) + "\n"


def _run(args) -> tuple[str, int]:
    if args.command == "gen":
        if args.family == "bowtie":
            H = pleated_bowtie(args.t, args.convention)
            return format_hypergraph(H, f"pleated bowtie t={args.t} ({args.convention})"), EXIT_OK
        if args.family == "octahedron":
            H = modified_octahedron(args.variant)
            return format_hypergraph(H, f"modified octahedron ({args.variant})"), EXIT_OK
        if args.family == "star":
            return format_hypergraph(hyperstar(args.eta, args.k), f"hyperstar eta={args.eta} k={args.k}"), EXIT_OK
        if args.family == "windmill":
            return format_multigraph(windmill(args.eta, args.k), f"windmill eta={args.eta} k={args.k}"), EXIT_OK
        H = random_connected_kgraph(args.n, args.m, args.k, args.seed)
        header = f"random connected k-graph n={args.n} m={args.m} k={args.k} seed={args.seed}"
        return format_hypergraph(H, header), EXIT_OK

    if args.command == "scan":
        cfg = _config(args)
        if args.scan == "bowtie":
            rows = bowtie_scan(args.t_min, args.t_max, args.convention, cfg, args.tie_tol, args.jobs)
        else:
            rows = delta_scan(args.k, args.eta, args.validate_upto, cfg)
        text = _tsv(rows) if args.format == "tsv" else dumps(rows) + "\n"
        return text, EXIT_OK

    text, source = _read(args.file)
    H = parse_hypergraph(text, source)
    cfg = _config(args)
    if args.command == "eigen":
        if args.shadow:
            pair = principal_eigenpair_graph(clique_shadow(H), cfg)
        else:
            pair = principal_eigenpair_hyper(H, cfg)
        return render_eigenpair(pair, cfg, source), EXIT_OK
    if args.command == "compare":
        return render_report(compare(H, cfg, args.tie_tol), source), EXIT_OK
    checks = verify_instance(H, cfg, args.seed)
    ok = all(c["ok"] for c in checks.values())
    doc = {"input": {"source": source, "k": H.k, "n": H.n, "m": H.m}, "all_ok": ok, "checks": checks}
    return dumps(doc) + "\n", EXIT_OK if ok else EXIT_CHECK_FAILED


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        text, code = _run(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (ValidationError, DisconnectedInput) as exc:
        print(f"invalid input: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except NoConvergence as exc:
        print(f"no convergence: {exc}", file=sys.stderr)
        return EXIT_NO_CONVERGENCE
    except OSError as exc:
        print(f"cannot read input: {exc}", file=sys.stderr)
        return EXIT_PARSE
    if getattr(args, "out", None):
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
