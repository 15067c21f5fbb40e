"""Shared service-layer helpers: query normalization, payload documents,
and canonical serialization used identically by the CLI and the HTTP API."""

from __future__ import annotations

import json
from datetime import datetime, timezone

from . import stats
from .benchstore import FILTER_DIMENSIONS, METRICS, WEIGHTINGS, BenchStore
from .errors import EmptySegmentError
from .leaderboard import Leaderboard, LeaderboardQuery, build_leaderboard

DENSITY_SCHEMA_VERSION = 1
API_SCHEMA_VERSION = 1
SALT_ENV_VAR = "HEALTHBENCH_SALT"

_METRIC_ALIASES = {"avg": "avg_health", "hotspot": "hotspot_health"}


def canonical_json(doc) -> str:
    """One canonical byte representation for cross-interface comparisons."""
    return json.dumps(doc, sort_keys=True, separators=(",", ":"), ensure_ascii=False)


def normalize_metric(raw: str) -> str:
    metric = _METRIC_ALIASES.get(raw, raw)
    if metric not in METRICS:
        raise ValueError(f"unknown metric: {raw!r}")
    return metric


def normalize_weighting(raw: str) -> str:
    if raw not in WEIGHTINGS:
        raise ValueError(f"unknown weighting: {raw!r}")
    return raw


def normalize_filters(filters: dict[str, str]) -> dict[str, str]:
    for dim in filters:
        if dim not in FILTER_DIMENSIONS:
            raise ValueError(f"unknown filter dimension: {dim!r}")
    return dict(sorted(filters.items()))


def density_doc(
    store: BenchStore, metric: str, weighting: str, filters: dict[str, str]
) -> dict:
    """Distribution payload for one segment: plot-ready table plus summary."""
    rows = store.query(filters, metric, weighting)
    if not rows:
        raise EmptySegmentError("empty segment")
    sample = stats.Sample(
        values=tuple(r.value for r in rows), weights=tuple(r.weight for r in rows)
    )
    curve = stats.summarize(sample)
    return {
        "schema_version": DENSITY_SCHEMA_VERSION,
        "metric": metric,
        "weighting": weighting,
        "filters": dict(sorted(filters.items())),
        "n": curve.n,
        "bandwidth": curve.bandwidth,
        "mode": curve.mode,
        "p10": curve.p10,
        "p90": curve.p90,
        "mass": curve.mass(),
        "grid": list(curve.grid),
        "density": list(curve.density),
    }


def board_doc(
    store: BenchStore, metric: str, weighting: str, filters: dict[str, str], salt: str
) -> dict:
    query = LeaderboardQuery(metric=metric, weighting=weighting, filters=filters)
    return build_leaderboard(store, query, salt).to_doc()


def leaderboard_for(
    store: BenchStore, metric: str, weighting: str, filters: dict[str, str], salt: str
) -> Leaderboard:
    query = LeaderboardQuery(metric=metric, weighting=weighting, filters=filters)
    return build_leaderboard(store, query, salt)


def parse_as_of(raw: str | None) -> datetime:
    """ISO date or instant; bare dates mean UTC midnight; default is today 00:00 UTC."""
    if raw is None:
        now = datetime.now(timezone.utc)
        return now.replace(hour=0, minute=0, second=0, microsecond=0)
    parsed = datetime.fromisoformat(raw)
    if parsed.tzinfo is None:
        parsed = parsed.replace(tzinfo=timezone.utc)
    return parsed


def render_density_text(doc: dict) -> str:
    """Human-facing CLI output: summary header plus the two-column table."""
    filters = ",".join(f"{k}={v}" for k, v in doc["filters"].items()) or "<all>"
    header = [
        f"# metric={doc['metric']} weighting={doc['weighting']} filters={filters} n={doc['n']}",
        (
            f"# mode={doc['mode']:.6g} p10={doc['p10']:.6g} p90={doc['p90']:.6g}"
            f" bandwidth={doc['bandwidth']:.6g} mass={doc['mass']:.6g}"
        ),
    ]
    rows = [f"{g:.6f}\t{d:.12g}" for g, d in zip(doc["grid"], doc["density"])]
    return "\n".join(header + rows)


def render_board_text(doc: dict) -> str:
    lines = [
        f"# metric={doc['query']['metric']} weighting={doc['query']['weighting']}"
        f" p10={doc['thresholds']['p10']:.6g} p90={doc['thresholds']['p90']:.6g}"
    ]
    for advisory in doc["advisories"]:
        lines.append(f"# advisory: {advisory}")
    lines.append(f"{'rank':>4}  {'handle':<16} {'points':>6}  {'band':<7}")
    for e in doc["entries"]:
        lines.append(f"{e['rank']:>4}  {e['handle']:<16} {e['points']:>6}  {e['band']:<7}")
    return "\n".join(lines)
