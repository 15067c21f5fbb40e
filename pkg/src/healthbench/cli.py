"""Command-line entry point: analyze, ingest, bench, leaderboard, serve."""

from __future__ import annotations

import argparse
import json
import os
import sys

from .analysis import analyze_project, load_analysis_doc
from .benchstore import BenchStore, load_metadata_csv
from .errors import HealthbenchError
from .service import (
    SALT_ENV_VAR,
    board_doc,
    canonical_json,
    density_doc,
    normalize_filters,
    normalize_metric,
    normalize_weighting,
    parse_as_of,
    render_board_text,
    render_density_text,
)


def _parse_filters(pairs: list[str] | None) -> dict[str, str]:
    filters: dict[str, str] = {}
    for pair in pairs or []:
        dim, sep, label = pair.partition("=")
        if not sep or not dim or not label:
            raise SystemExit2(f"--filter expects dim=label, got {pair!r}")
        if dim in filters:
            raise SystemExit2(f"duplicate --filter for dimension {dim!r}")
        filters[dim] = label
    try:
        return normalize_filters(filters)
    except ValueError as exc:
        raise SystemExit2(str(exc))


class SystemExit2(Exception):
    """Usage error; exits with status 2."""


def _salt_from_env() -> str:
    salt = os.environ.get(SALT_ENV_VAR, "")
    if not salt:
        raise HealthbenchError(
            f"anonymization salt required: set {SALT_ENV_VAR} (never pass salts as flags)"
        )
    return salt


def _cmd_analyze(args) -> int:
    as_of = parse_as_of(args.as_of)
    result = analyze_project(args.repo, as_of, args.project_id)
    doc = result.to_doc()
    with open(args.out, "w", encoding="utf-8") as fh:
        json.dump(doc, fh, indent=2, sort_keys=True)
        fh.write("\n")
    print(f"wrote {args.out}: avg_health={doc['avg_health']:.4g} sloc={doc['total_sloc']}")
    return 0


def _cmd_ingest(args) -> int:
    doc = load_analysis_doc(args.analysis)
    store = BenchStore.load(args.store)
    metadata = None
    if args.metadata:
        metadata = load_metadata_csv(args.metadata).get(args.org)
    record = store.ingest(doc, org_id=args.org, metadata=metadata)
    print(f"ingested {record.record_id} for org {record.org_id}")
    return 0


def _cmd_bench(args) -> int:
    store = BenchStore.load(args.store)
    doc = density_doc(
        store,
        normalize_metric(args.metric),
        normalize_weighting(args.weighting),
        _parse_filters(args.filter),
    )
    print(canonical_json(doc) if args.json else render_density_text(doc))
    return 0


def _cmd_leaderboard(args) -> int:
    store = BenchStore.load(args.store)
    doc = board_doc(
        store,
        normalize_metric(args.metric),
        normalize_weighting(args.weighting),
        _parse_filters(args.filter),
        _salt_from_env(),
    )
    print(canonical_json(doc) if args.json else render_board_text(doc))
    return 0


def _cmd_serve(args) -> int:
    import uvicorn

    from .api import create_app

    app = create_app(BenchStore.load(args.store), _salt_from_env())
    host, _, port = args.bind.partition(":")
    uvicorn.run(app, host=host or "127.0.0.1", port=int(port or 8000), log_level="warning")
    return 0


def _add_query_flags(parser):
    parser.add_argument("--metric", default="avg", help="avg or hotspot")
    parser.add_argument("--weighting", default="raw", choices=["raw", "sloc"])
    parser.add_argument(
        "--filter",
        action="append",
        metavar="DIM=LABEL",
        help="segment filter, repeatable; one per dimension",
    )
    parser.add_argument("--json", action="store_true", help="emit the canonical JSON payload")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="healthbench")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="analyze one git repository")
    p.add_argument("repo")
    p.add_argument("--project-id", required=True)
    p.add_argument("--as-of", help="ISO date/instant; defaults to current UTC midnight")
    p.add_argument("--out", required=True, help="output path for the analysis document")
    p.set_defaults(func=_cmd_analyze)

    p = sub.add_parser("ingest", help="ingest an analysis document into a store")
    p.add_argument("--store", required=True)
    p.add_argument("--analysis", required=True)
    p.add_argument("--org", required=True, help="organization key (kept out of all outputs)")
    p.add_argument("--metadata", help="org metadata CSV (org_id, employees, industry_segment)")
    p.set_defaults(func=_cmd_ingest)

    p = sub.add_parser("bench", help="print a segment's density table and summary")
    p.add_argument("--store", required=True)
    _add_query_flags(p)
    p.set_defaults(func=_cmd_bench)

    p = sub.add_parser("leaderboard", help="print the anonymous leaderboard for a segment")
    p.add_argument("--store", required=True)
    _add_query_flags(p)
    p.set_defaults(func=_cmd_leaderboard)

    p = sub.add_parser("serve", help="serve the HTTP API")
    p.add_argument("--store", required=True)
    p.add_argument("--bind", default="127.0.0.1:8000", metavar="HOST:PORT")
    p.set_defaults(func=_cmd_serve)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except SystemExit2 as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except HealthbenchError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
