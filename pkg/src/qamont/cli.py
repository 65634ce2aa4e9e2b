"""Command line front end.

Subcommands: ``classify`` for explicit link expressions, ``enumerate`` for
parameter families, ``laufer`` and ``embed`` for plumbing graph files.
Machine output is jsonl (one record per line) or tsv; ``table`` is for
humans and carries no stability guarantee.  Exit codes: 0 success, 2 input
error, 3 precondition error (e.g. an indefinite graph), 4 internal guard
tripped.

Records are bit-exact across runs and worker counts; per-record timing is
therefore only emitted when ``--timing`` is requested.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from .classifier import classify, enumerate_family, explain, render_explain, verify
from .errors import (NotNegativeDefiniteError, ParseError, StepLimitError,
                     TruncationNotFoundError)
from .lattice import enumerate_embeddings, qa_lattice_obstruction, transpose_surjective
from .laufer import laufer_run
from .montesinos import canonical_form, format_link, parse_link
from .plumbing import adjacency_matrix, parse_graph

_RECORD_FIELDS = ["link", "canonical", "e", "p", "det", "epsilon",
                  "status", "reason", "evidence"]

_JOBS_ENV = "QAMONT_JOBS"  # advisory default for --jobs


def _default_jobs() -> int:
    value = os.environ.get(_JOBS_ENV, "")
    try:
        return max(1, int(value))
    except ValueError:
        return 1


def _build_record(task: tuple[str, bool, bool, bool]) -> dict:
    text, with_verify, with_explain, with_timing = task
    start = time.perf_counter_ns()
    link = parse_link(text)
    verdict = classify(link)
    evidence = verify(link) if with_verify else None
    record = {
        "link": text,
        "canonical": format_link(canonical_form(link)),
        "e": verdict.normalized.e,
        "p": verdict.normalized.p,
        "det": verdict.det,
        "epsilon": f"{verdict.epsilon.numerator}/{verdict.epsilon.denominator}",
        "status": verdict.status.value,
        "reason": verdict.reason.value,
        "evidence": evidence.branch.value if evidence else None,
    }
    if with_timing:
        record["ms"] = (time.perf_counter_ns() - start) // 1_000_000
    if with_explain:
        record["explain"] = explain(link, include_verify=with_verify)
    return record


def _records(texts: list[str], args) -> "list[dict]":
    tasks = [(t, args.verify, args.explain, args.timing) for t in texts]
    if args.jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            return list(pool.map(_build_record, tasks, chunksize=4))
    return [_build_record(task) for task in tasks]


def _emit(records: list[dict], args) -> None:
    fields = _RECORD_FIELDS + (["ms"] if args.timing else [])
    if args.format == "jsonl":
        for record in records:
            print(json.dumps(record))
        return
    if args.format == "tsv":
        print("\t".join(fields))
        for record in records:
            print("\t".join(str(record[f]) if record[f] is not None else ""
                            for f in fields))
        return
    # table: aligned columns, then any explain traces
    rows = [[str(record[f]) if record[f] is not None else "-" for f in fields]
            for record in records]
    widths = [max(len(f), *(len(row[i]) for row in rows)) if rows else len(f)
              for i, f in enumerate(fields)]
    print("  ".join(f.ljust(w) for f, w in zip(fields, widths)))
    for row in rows:
        print("  ".join(cell.ljust(w) for cell, w in zip(row, widths)))
    if args.explain:
        for record in records:
            print()
            print(render_explain(record["explain"]))


def _check_explain_format(args) -> None:
    if args.explain and args.format == "tsv":
        raise ValueError("--explain is not available with tsv output; "
                         "use jsonl or table")


def cmd_classify(args) -> int:
    _check_explain_format(args)
    records = _records([t.strip() for t in args.links], args)
    _emit(records, args)
    return 0


def cmd_enumerate(args) -> int:
    _check_explain_format(args)
    p_min, p_max = (args.p, args.p) if args.p is not None else (1, args.p_max)
    family = enumerate_family(p_max, args.alpha_max, args.e_min, args.e_max,
                              p_min=p_min)
    texts = [format_link(link) for link in family]
    records = _records(texts, args)
    _emit(records, args)
    return 0


def _read_graph(path: str):
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise ParseError(f"cannot read graph file {path!r}: {exc}") from None
    return parse_graph(text)


def cmd_laufer(args) -> int:
    graph = _read_graph(args.graph_file)
    result = laufer_run(adjacency_matrix(graph))
    print(f"verdict: {result.verdict.value}")
    print(f"steps: {result.steps}")
    print("cycle: " + " ".join(str(c) for c in result.cycle))
    if result.witness is None:
        print("witness: none")
    else:
        suffix = " (central)" if result.witness == 0 else ""
        print(f"witness: {result.witness}{suffix}")
    return 0


def cmd_embed(args) -> int:
    graph = _read_graph(args.graph_file)
    if args.all:
        q = adjacency_matrix(graph)
        k = len(q)
        high = args.n_max if args.n_max is not None else sum(-q[i][i] for i in range(k))
        total = 0
        for n in range(k, high + 1):
            for emb in enumerate_embeddings(q, n):
                total += 1
                surjective = "true" if transpose_surjective(emb) else "false"
                print(f"embedding n={n} index={total} surjective={surjective}")
                for row in emb.matrix:
                    print(" ".join(str(v) for v in row))
                print()
        print(f"total: {total}")
        return 0
    result = qa_lattice_obstruction(graph, args.n_max)
    if result.obstructed:
        print("Obstructed")
    else:
        print(f"NotObstructed n={result.witness_n}")
        for row in result.witness.matrix:
            print(" ".join(str(v) for v in row))
    return 0


def _add_record_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--verify", action="store_true",
                        help="run the full obstruction pipeline per link")
    parser.add_argument("--explain", action="store_true",
                        help="attach the classification trace")
    parser.add_argument("--format", choices=["jsonl", "tsv", "table"],
                        default="jsonl", help="output format (default jsonl)")
    parser.add_argument("--jobs", type=int, default=_default_jobs(),
                        help=f"worker processes (default from ${_JOBS_ENV} or 1)")
    parser.add_argument("--timing", action="store_true",
                        help="include per-record milliseconds (breaks byte-for-byte "
                             "reproducibility)")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qamont",
        description="Classify quasi-alternating Montesinos links and verify "
                    "the verdicts through plumbing singularities and lattice "
                    "embeddings.")
    sub = parser.add_subparsers(dest="command", required=True)

    p_classify = sub.add_parser("classify", help="classify link expressions")
    p_classify.add_argument("links", nargs="+", metavar="LINK",
                            help='link expression, e.g. "M(0; 5/2, 7/3)"')
    _add_record_flags(p_classify)
    p_classify.set_defaults(func=cmd_classify)

    p_enum = sub.add_parser("enumerate", help="classify a parameter family")
    group = p_enum.add_mutually_exclusive_group(required=True)
    group.add_argument("--p", type=int, help="exact number of tangles")
    group.add_argument("--p-max", type=int, help="enumerate p = 1..P_MAX")
    p_enum.add_argument("--alpha-max", type=int, required=True)
    p_enum.add_argument("--e-min", type=int, required=True)
    p_enum.add_argument("--e-max", type=int, required=True)
    _add_record_flags(p_enum)
    p_enum.set_defaults(func=cmd_enumerate)

    p_laufer = sub.add_parser("laufer", help="run the computation sequence on a graph file")
    p_laufer.add_argument("graph_file")
    p_laufer.set_defaults(func=cmd_laufer)

    p_embed = sub.add_parser("embed", help="search lattice embeddings of a graph file")
    p_embed.add_argument("graph_file")
    p_embed.add_argument("--n-max", type=int, default=None,
                         help="override the ambient rank bound")
    mode = p_embed.add_mutually_exclusive_group()
    mode.add_argument("--all", action="store_true",
                      help="print every embedding with its surjectivity verdict")
    mode.add_argument("--first-surjective", action="store_true",
                      help="stop at the first surjective-transpose embedding (default)")
    p_embed.set_defaults(func=cmd_embed)

    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except NotNegativeDefiniteError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (StepLimitError, TruncationNotFoundError) as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return 4
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
