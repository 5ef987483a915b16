"""Command-line front end: ``build``, ``entropy`` and ``verify``.

Exit codes: 0 when a verified claim holds (or a command succeeds), 1 when a
counterexample or inconclusive case is found, 2 for usage or input errors.
"""
from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

from . import oracle
from .colex import build_colex, build_colex_k
from .formats import GRAPH_FORMATS, read_graph, write_graph
from .graph import DegreeSequence, degree_sequence, entropy, h_exact_key, h_value
from .reports import REPORT_FORMATS, render

OUTDIR_ENV = "COLEX_ENTROPY_OUTDIR"

CLAIMS = {
    "main": "C(m) uniquely maximises h among all graphs of size m",
    "max-entropy": "m K2 uniquely minimises h among all graphs of size m",
    "largeclique": "h(C(m,k)) > h(C(m,k-1)) for m >= C(k,2)",
    "boundary": "C(m,k) and C(m,k-1) coincide at m = C(k,2)-1",
    "threshold": "C(m,k) maximises h among threshold graphs of size m and clique number k",
    "extremal-threshold": "every h-maximiser is a connected threshold graph",
    "trees": "star / path / 3-leaf ordering of h among trees",
    "bounded-degree": "h-maximiser under a maximum-degree bound r",
    "telescoping": "telescoping inequality for the small-a case of the clique comparison",
    "balanced-gain": "near-balanced split maximises sum f(z+l) - sum f(z)",
}


class InputError(Exception):
    pass


def _positive(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be positive: {value}")
    return value


def _non_negative(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be non-negative: {value}")
    return value


def _int_list(text: str) -> list[int]:
    try:
        values = [int(tok) for tok in text.split(",") if tok.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers: {text!r}") from None
    if not values or min(values) < 1:
        raise argparse.ArgumentTypeError(f"expected positive integers: {text!r}")
    return values


def _summary(s: DegreeSequence, precision: int) -> list[str]:
    return [
        f"m: {s.size}",
        f"degrees: {s}",
        f"h: {h_value(s):.{precision}g}",
        f"entropy: {entropy(s):.{precision}g}",
        f"exact_key: {h_exact_key(s)}",
    ]


def _emit(text: str, output: str | None, default_name: str) -> None:
    if output is None and os.environ.get(OUTDIR_ENV):
        output = str(Path(os.environ[OUTDIR_ENV]) / default_name)
    if output is None or output == "-":
        sys.stdout.write(text)
    else:
        path = Path(output)
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(text)


def cmd_build(args: argparse.Namespace) -> int:
    try:
        g = build_colex(args.m) if args.k is None else build_colex_k(args.m, args.k)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    s = degree_sequence(g)
    name = f"colex_m{args.m}" + ("" if args.k is None else f"_k{args.k}")
    ext = {"edgelist": "txt", "graph6": "g6", "dot": "dot"}[args.format]
    _emit(write_graph(g, args.format), args.output, f"{name}.{ext}")
    print("\n".join(_summary(s, args.precision)), file=sys.stderr)
    return 0


def cmd_entropy(args: argparse.Namespace) -> int:
    if args.sequence is not None:
        try:
            s = DegreeSequence.parse(args.sequence)
        except ValueError as exc:
            raise InputError(str(exc)) from None
        if not s:
            raise InputError("empty degree sequence")
        failed = oracle.erdos_gallai_violation(s)
        if failed == 0:
            raise InputError(f"sequence {s} has odd degree sum: not a graph degree sum")
        if failed is not None:
            raise InputError(f"sequence {s} is not graphical: Erdős–Gallai inequality fails at k={failed}")
    else:
        source = args.input or "-"
        try:
            text = sys.stdin.read() if source == "-" else Path(source).read_text()
            g = read_graph(text)
        except (OSError, ValueError) as exc:
            raise InputError(f"cannot read graph from {source}: {exc}") from None
        s = degree_sequence(g)
        if not s:
            raise InputError("graph has no edges")
    print("\n".join(_summary(s, args.precision)))
    return 0


def _run_claim(args: argparse.Namespace) -> oracle.VerificationOutcome:
    jobs = args.jobs
    claim = args.claim
    if claim == "main":
        return oracle.verify_main_theorem(args.m_max or 12, jobs=jobs)
    if claim == "max-entropy":
        return oracle.verify_max_entropy(args.m_max or 15, jobs=jobs)
    if claim == "largeclique":
        return oracle.verify_lemma_largeclique(args.k_max or 30, 500 if args.span is None else args.span, jobs=jobs)
    if claim == "boundary":
        return oracle.verify_equality_boundary(args.k_max or 50, jobs=jobs)
    if claim == "threshold":
        return oracle.verify_threshold_theorem(args.m_max or 12, jobs=jobs)
    if claim == "extremal-threshold":
        return oracle.verify_extremal_is_threshold(args.m_max or 15, jobs=jobs)
    if claim == "trees":
        return oracle.verify_trees(args.n_max or 12, jobs=jobs)
    if claim == "bounded-degree":
        rs = args.r or [2, 3, 4]
        if args.m is not None:
            if len(rs) != 1:
                raise InputError("--m needs a single --r value")
            return oracle.verify_bounded_degree(args.m, rs[0])
        return oracle.verify_bounded_degree_sweep(args.m_max or 15, rs, jobs=jobs)
    if claim == "telescoping":
        return oracle.verify_telescoping(args.k_max or 200, jobs=jobs)
    if claim == "balanced-gain":
        return oracle.verify_balanced_gain(30 if args.t_max is None else args.t_max,
                                           args.n_max or 6, args.ell_max or 5, jobs=jobs)
    raise InputError(f"unknown claim {claim!r}")


def cmd_verify(args: argparse.Namespace) -> int:
    if args.claim in ("largeclique", "boundary", "telescoping") and args.k_max is not None and args.k_max < 3:
        raise InputError("--k-max must be at least 3")
    if args.claim == "trees" and args.n_max is not None and args.n_max < 3:
        raise InputError("--n-max must be at least 3")
    outcome = _run_claim(args)
    ext = {"json": "json", "csv": "csv", "text": "txt"}[args.format]
    _emit(render(outcome, args.format, args.precision, args.timing), args.output, f"{args.claim}.{ext}")
    if args.format != "text" and (args.output not in (None, "-") or os.environ.get(OUTDIR_ENV)):
        sys.stdout.write(render(outcome, "text", args.precision, args.timing))
    return 0 if outcome.holds else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="colex-entropy",
        description="Colex graphs, degree-based entropy and brute-force verification of its extremal graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build", help="write C(m) or C(m,k)")
    p.add_argument("--m", type=_positive, required=True, help="number of edges")
    p.add_argument("--k", type=int, help="clique parameter; builds C(m,k) instead of C(m)")
    p.add_argument("--format", choices=GRAPH_FORMATS, default="edgelist")
    p.add_argument("--output", help="output file ('-' for stdout)")
    p.add_argument("--precision", type=_positive, default=12, help="significant digits for floats")
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("entropy", help="h, entropy and exact key of a graph or degree sequence")
    src = p.add_mutually_exclusive_group()
    src.add_argument("--sequence", help="comma-separated degree sequence")
    src.add_argument("--input", help="edge-list or graph6 file ('-' for stdin, the default)")
    p.add_argument("--precision", type=_positive, default=12)
    p.set_defaults(func=cmd_entropy)

    p = sub.add_parser("verify", help="run a brute-force verification sweep")
    p.add_argument("claim", choices=sorted(CLAIMS), help="; ".join(f"{k}: {v}" for k, v in CLAIMS.items()))
    p.add_argument("--m-max", type=_positive)
    p.add_argument("--k-max", type=_positive)
    p.add_argument("--span", type=_non_negative)
    p.add_argument("--n-max", type=_positive)
    p.add_argument("--t-max", type=_non_negative)
    p.add_argument("--ell-max", type=_positive)
    p.add_argument("--m", type=_positive, help="single size for bounded-degree")
    p.add_argument("--r", type=_int_list, help="degree bound(s) for bounded-degree, e.g. 2,3,4")
    p.add_argument("--format", choices=REPORT_FORMATS, default="text")
    p.add_argument("--output", help="report file ('-' for stdout)")
    p.add_argument("--jobs", type=_positive, default=os.cpu_count() or 1, help="worker processes")
    p.add_argument("--precision", type=_positive, default=12)
    p.add_argument("--timing", action="store_true", help="include elapsed time (reports stop being byte-stable)")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
