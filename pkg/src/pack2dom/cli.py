"""Command-line front end.

Subcommands:
  invariants  exact invariants (n, m, gamma, beta, alpha, nu2, degrees) per graph
  generate    emit one family tree T(s,t) with its role map
  recognize   decide family membership per input graph
  survey      run every claim check over a builtin or file corpus
  enumerate   dump the builtin connected-graph stream as graph6

Exit codes: 0 success, 2 parse/input error, 3 solver bound exceeded,
4 invalid generation parameters, 5 survey found a claim counterexample.
"""
from __future__ import annotations

import argparse
import csv
import json
import sys
from pathlib import Path

from .domination import beta_exact, gamma_exact
from .errors import BoundExceededError, Graph6Error, GraphError
from .family import FamilyParams, generate_family, recognize
from .graph import Graph, degree_profile
from .graph6 import format_edgelist, parse_edgelist, parse_graph6, to_graph6
from .enumeration import enumerate_connected, ingest_graph6
from .packing import nu2_matching
from .verification import SurveyOptions, run_survey

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_BOUND = 3
EXIT_PARAMS = 4
EXIT_COUNTEREXAMPLE = 5

INVARIANT_FIELDS = (
    "n",
    "m",
    "connected",
    "gamma",
    "beta",
    "alpha",
    "nu2",
    "max_degree",
    "min_degree",
)


def _read_text(source: str) -> str:
    if source == "-":
        return sys.stdin.read()
    path = Path(source)
    if not path.is_file():
        raise Graph6Error(f"cannot read input: {source}")
    return path.read_text(encoding="ascii")


def _sniff_format(text: str, declared: str) -> str:
    if declared != "auto":
        return declared
    for line in text.splitlines():
        stripped = line.split("#", 1)[0].strip()
        if not stripped:
            continue
        parts = stripped.split()
        if len(parts) == 2 and all(p.isdigit() for p in parts):
            return "edgelist"
        return "graph6"
    return "graph6"


def _load_graphs(source: str, declared_format: str) -> list[Graph]:
    text = _read_text(source)
    fmt = _sniff_format(text, declared_format)
    if fmt == "edgelist":
        return [parse_edgelist(text)]
    graphs = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        try:
            graphs.append(parse_graph6(line))
        except Graph6Error as exc:
            raise Graph6Error(f"line {lineno}: {exc}") from None
    return graphs


def _open_output(path: str | None):
    if path is None or path == "-":
        return sys.stdout, False
    return open(path, "w", encoding="utf-8", newline="\n"), True


def cmd_invariants(args: argparse.Namespace) -> int:
    graphs = _load_graphs(args.input, args.format)
    records = []
    for g in graphs:
        profile = degree_profile(g)
        beta = beta_exact(g).beta
        records.append(
            {
                "n": g.n,
                "m": g.m,
                "connected": g.is_connected(),
                "gamma": gamma_exact(g).gamma,
                "beta": beta,
                "alpha": g.n - beta,
                "nu2": nu2_matching(g).nu2,
                "max_degree": profile.max_degree,
                "min_degree": profile.min_degree,
            }
        )
    out, close = _open_output(args.output)
    try:
        _write_records(records, args.out_format, out)
    finally:
        if close:
            out.close()
    return EXIT_OK


def _write_records(records: list[dict], out_format: str, out) -> None:
    if out_format == "json":
        for record in records:
            out.write(json.dumps(record, sort_keys=True, separators=(",", ":")) + "\n")
    elif out_format == "csv":
        writer = csv.DictWriter(out, fieldnames=INVARIANT_FIELDS, lineterminator="\n")
        writer.writeheader()
        for record in records:
            writer.writerow(record)
    else:
        for i, record in enumerate(records):
            parts = " ".join(f"{key}={record[key]}" for key in INVARIANT_FIELDS)
            out.write(f"graph {i}: {parts}\n")


def cmd_generate(args: argparse.Namespace) -> int:
    try:
        graph, roles = generate_family(args.s, args.t)
    except GraphError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARAMS
    out, close = _open_output(args.output)
    try:
        if args.format == "edgelist":
            out.write(format_edgelist(graph))
        else:
            out.write(to_graph6(graph) + "\n")
        if args.roles:
            out.write(json.dumps(roles, sort_keys=True) + "\n")
    finally:
        if close:
            out.close()
    return EXIT_OK


def cmd_recognize(args: argparse.Namespace) -> int:
    graphs = _load_graphs(args.input, args.format)
    out, close = _open_output(args.output)
    try:
        for g in graphs:
            outcome = recognize(g)
            if isinstance(outcome, FamilyParams):
                out.write(f"T({outcome.s},{outcome.t},{outcome.r})\n")
            else:
                out.write(f"reject: {outcome.reason}\n")
    finally:
        if close:
            out.close()
    return EXIT_OK


def cmd_survey(args: argparse.Namespace) -> int:
    if args.builtin is not None:
        stream = enumerate_connected(args.builtin)
    else:
        stream = ingest_graph6(args.corpus, expect_connected=True)
    options = SurveyOptions(
        lemma_checks=not args.no_lemmas,
        lemma_edge_bound=args.lemma_bound,
        workers=args.workers,
        jsonl_path=args.output,
        checkpoint_path=args.checkpoint,
    )
    survey = run_survey(stream, options)
    sys.stdout.write(survey.summary_json())
    return EXIT_COUNTEREXAMPLE if survey.failures else EXIT_OK


def cmd_enumerate(args: argparse.Namespace) -> int:
    stream = enumerate_connected(args.n)
    out, close = _open_output(args.output)
    try:
        for g in stream:
            out.write(to_graph6(g) + "\n")
    finally:
        if close:
            out.close()
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pack2dom",
        description="Exact domination / covering / edge-2-packing toolkit for small graphs",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_io(p: argparse.ArgumentParser) -> None:
        p.add_argument("input", nargs="?", default="-", help="path or '-' for stdin")
        p.add_argument(
            "--format",
            choices=("graph6", "edgelist", "auto"),
            default="auto",
            help="input format (auto sniffs by first line)",
        )
        p.add_argument("--output", default=None, help="output path (default stdout)")

    p_inv = sub.add_parser("invariants", help="exact invariants per input graph")
    add_io(p_inv)
    p_inv.add_argument(
        "--out-format", choices=("json", "csv", "text"), default="text"
    )
    p_inv.set_defaults(func=cmd_invariants)

    p_gen = sub.add_parser("generate", help="emit a family tree T(s,t)")
    p_gen.add_argument("-s", type=int, required=True, help="pendant 2-paths (>= 1)")
    p_gen.add_argument("-t", type=int, required=True, help="pendant leaves (>= 1)")
    p_gen.add_argument("--format", choices=("graph6", "edgelist"), default="graph6")
    p_gen.add_argument("--roles", action="store_true", help="also print the role map")
    p_gen.add_argument("--output", default=None)
    p_gen.set_defaults(func=cmd_generate)

    p_rec = sub.add_parser("recognize", help="family membership per input graph")
    add_io(p_rec)
    p_rec.set_defaults(func=cmd_recognize)

    p_sur = sub.add_parser("survey", help="run all claim checks over a corpus")
    group = p_sur.add_mutually_exclusive_group(required=True)
    group.add_argument("--builtin", type=int, default=None, metavar="N",
                       help="builtin stream of all connected graphs on N vertices")
    group.add_argument("--corpus", default=None, help="graph6 file, one graph per line")
    p_sur.add_argument("--output", default=None, help="write per-graph JSON lines here")
    p_sur.add_argument("--checkpoint", default=None,
                       help="append-as-you-go JSONL enabling resumption")
    p_sur.add_argument("--workers", type=int, default=1)
    p_sur.add_argument("--no-lemmas", action="store_true",
                       help="skip the 2-packing enumeration lemma checks")
    p_sur.add_argument("--lemma-bound", type=int, default=None,
                       help="edge-count cap for the lemma checks")
    p_sur.set_defaults(func=cmd_survey)

    p_enum = sub.add_parser("enumerate", help="dump the builtin stream as graph6")
    p_enum.add_argument("n", type=int)
    p_enum.add_argument("--output", default=None)
    p_enum.set_defaults(func=cmd_enumerate)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except BoundExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BOUND
    except (Graph6Error, GraphError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
