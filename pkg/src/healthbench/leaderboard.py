"""Anonymous ranked leaderboards over filtered benchmark records.

Organizations are the players: an org's projects (latest ingest per project)
are consolidated SLoC-weighted into one value, anonymized under a keyed hash,
ranked by points, and banded against the segment's percentile thresholds.
"""

from __future__ import annotations

import hashlib
import hmac
from dataclasses import dataclass, field

from . import stats
from .benchstore import BenchStore, ProjectRecord, QueryRow, SegmentLabels
from .errors import EmptySegmentError

BOARD_SCHEMA_VERSION = 1
SMALL_SEGMENT_SIZE = 10

LEADER, MID, LAGGARD = "leader", "mid", "laggard"


@dataclass(frozen=True)
class LeaderboardQuery:
    metric: str = "hotspot_health"
    weighting: str = "raw"
    filters: dict[str, str] = field(default_factory=dict)

    def to_doc(self) -> dict:
        return {
            "metric": self.metric,
            "weighting": self.weighting,
            "filters": dict(sorted(self.filters.items())),
        }


@dataclass(frozen=True)
class LeaderboardEntry:
    rank: int
    handle: str
    points: int
    metric_value: float
    band: str
    labels: SegmentLabels

    def to_doc(self) -> dict:
        return {
            "rank": self.rank,
            "handle": self.handle,
            "points": self.points,
            "metric_value": self.metric_value,
            "band": self.band,
            "labels": self.labels.to_doc(),
        }


@dataclass(frozen=True)
class Leaderboard:
    query: LeaderboardQuery
    entries: tuple[LeaderboardEntry, ...]
    p10: float
    p90: float
    curve: stats.DensityCurve
    advisories: tuple[str, ...]

    def to_doc(self) -> dict:
        """Structured board document; the unit served over every interface."""
        return {
            "schema_version": BOARD_SCHEMA_VERSION,
            "query": self.query.to_doc(),
            "advisories": list(self.advisories),
            "thresholds": {"p10": self.p10, "p90": self.p90},
            "entries": [e.to_doc() for e in self.entries],
            "density_summary": {
                "mode": self.curve.mode,
                "p10": self.curve.p10,
                "p90": self.curve.p90,
                "bandwidth": self.curve.bandwidth,
                "n": self.curve.n,
                "mass": self.curve.mass(),
            },
        }


def anonymize(org_id: str, salt: str) -> str:
    """Deterministic pseudonymous handle; changing the salt changes every handle."""
    if not salt:
        raise ValueError("empty salt")
    digest = hmac.new(salt.encode("utf-8"), org_id.encode("utf-8"), hashlib.sha256)
    return f"org-{digest.hexdigest()[:12]}"


def _points(value: float) -> int:
    return int(value * 100 + 0.5)  # round half-up; the real value still drives banding


def _latest_per_project(rows: list[QueryRow]) -> list[QueryRow]:
    best: dict[str, QueryRow] = {}
    for row in rows:
        key = row.record.project_id
        prev = best.get(key)
        if prev is None or _ingest_order(row.record) > _ingest_order(prev.record):
            best[key] = row
    return list(best.values())


def _ingest_order(record: ProjectRecord) -> tuple:
    return (record.ingested_at, record.as_of, record.record_id)


def _consolidate_org(rows: list[QueryRow], weighting: str) -> tuple[float, float, SegmentLabels]:
    """One SLoC-weighted value per org across its kept project records."""
    kept = _latest_per_project(rows)
    mass = sum(float(r.record.total_sloc) for r in kept)
    if len(kept) == 1:
        value = kept[0].value  # exact; no weighted round trip for the common case
    else:
        value = sum(r.value * float(r.record.total_sloc) for r in kept) / mass
    weight = 1.0 if weighting == "raw" else mass
    dominant = max(kept, key=lambda r: (r.record.total_sloc, _ingest_order(r.record)))
    return value, weight, dominant.labels


def build_leaderboard(store: BenchStore, query: LeaderboardQuery, salt: str) -> Leaderboard:
    """Rank matching organizations and attach the segment's density curve."""
    if not salt:
        raise ValueError("empty salt")
    rows = store.query(query.filters, query.metric, query.weighting)
    if not rows:
        raise EmptySegmentError("empty segment")

    by_org: dict[str, list[QueryRow]] = {}
    for row in rows:
        by_org.setdefault(row.record.org_id, []).append(row)

    values: dict[str, float] = {}
    weights: dict[str, float] = {}
    labels: dict[str, SegmentLabels] = {}
    for org, org_rows in by_org.items():
        value, weight, org_labels = _consolidate_org(org_rows, query.weighting)
        values[org] = value
        weights[org] = weight
        labels[org] = org_labels

    handles = {org: anonymize(org, salt) for org in values}
    sample = stats.Sample(values=tuple(values.values()), weights=tuple(weights.values()))
    curve = stats.summarize(sample)
    p10, p90 = curve.p10, curve.p90

    ordering = sorted(values, key=lambda org: (-_points(values[org]), handles[org]))
    entries = []
    for rank, org in enumerate(ordering, start=1):
        value = values[org]
        if value >= p90:
            band = LEADER
        elif value <= p10:
            band = LAGGARD
        else:
            band = MID
        entries.append(
            LeaderboardEntry(
                rank=rank,
                handle=handles[org],
                points=_points(value),
                metric_value=value,
                band=band,
                labels=labels[org],
            )
        )

    advisories = ("small_segment",) if len(entries) < SMALL_SEGMENT_SIZE else ()
    return Leaderboard(
        query=query,
        entries=tuple(entries),
        p10=p10,
        p90=p90,
        curve=curve,
        advisories=advisories,
    )
