"""Benchmark record store: persistence, organization metadata, and the
segmentation schemes used to slice the benchmark.

Persistence is a single line-delimited JSON file plus an in-memory index:
desk-scale, diffable, portable. Writes are serialized through one lock;
readers work on immutable snapshots.
"""

from __future__ import annotations

import csv
import json
import os
import threading
from dataclasses import dataclass, replace
from datetime import datetime, timezone
from importlib import resources
from typing import NamedTuple

from .analysis import validate_analysis_doc
from .errors import SchemaMismatchError

STORE_SCHEMA_VERSION = 1
RULES_SCHEMA_VERSION = 1

SMALL, MEDIUM, LARGE, UNKNOWN = "Small", "Medium", "Large", "Unknown"
GREENFIELD, BROWNFIELD, LEGACY = "Greenfield", "Brownfield", "Legacy"

METRICS = ("avg_health", "hotspot_health")
WEIGHTINGS = ("raw", "sloc")
FILTER_DIMENSIONS = ("cluster", "codebase_size", "company_size", "age", "language")


@dataclass(frozen=True)
class SegmentLabels:
    codebase_size: str
    company_size: str
    age: str
    cluster: str

    def to_doc(self) -> dict:
        return {
            "codebase_size": self.codebase_size,
            "company_size": self.company_size,
            "age": self.age,
            "cluster": self.cluster,
        }


@dataclass(frozen=True)
class SegmentRules:
    codebase_small_max: int
    codebase_medium_max: int
    company_small_min: int
    company_small_max: int
    company_medium_max: int
    greenfield_min_year: int
    brownfield_min_year: int
    cluster_map: dict[str, str]  # normalized industry segment -> cluster label


def _normalize_segment(label: str) -> str:
    return " ".join(label.split()).casefold()


def load_segment_rules(path: str | None = None) -> SegmentRules:
    if path is None:
        text = resources.files("healthbench.data").joinpath("clusters.json").read_text("utf-8")
    else:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    doc = json.loads(text)
    if doc.get("schema_version") != RULES_SCHEMA_VERSION:
        raise ValueError(f"unsupported rules schema_version: {doc.get('schema_version')!r}")
    cluster_map = {}
    for cluster, segments in doc["clusters"].items():
        for segment in segments:
            cluster_map[_normalize_segment(segment)] = cluster
    return SegmentRules(
        codebase_small_max=doc["codebase_sloc_bins"]["small_max"],
        codebase_medium_max=doc["codebase_sloc_bins"]["medium_max"],
        company_small_min=doc["company_employee_bins"]["small_min"],
        company_small_max=doc["company_employee_bins"]["small_max"],
        company_medium_max=doc["company_employee_bins"]["medium_max"],
        greenfield_min_year=doc["age_year_bins"]["greenfield_min"],
        brownfield_min_year=doc["age_year_bins"]["brownfield_min"],
        cluster_map=cluster_map,
    )


_default_rules: SegmentRules | None = None


def default_segment_rules() -> SegmentRules:
    global _default_rules
    if _default_rules is None:
        _default_rules = load_segment_rules()
    return _default_rules


@dataclass(frozen=True)
class ProjectRecord:
    record_id: str
    project_id: str
    as_of: str  # ISO instant
    org_id: str
    avg_health: float
    hotspot_health: float | None
    total_sloc: int
    employees: int | None
    industry_segment: str | None
    inception_year: int
    dominant_language: str
    per_language: dict[str, tuple[float, int]]
    ingested_at: str  # ISO instant

    def to_doc(self) -> dict:
        return {
            "schema_version": STORE_SCHEMA_VERSION,
            "record_id": self.record_id,
            "project_id": self.project_id,
            "as_of": self.as_of,
            "org_id": self.org_id,
            "avg_health": self.avg_health,
            "hotspot_health": self.hotspot_health,
            "total_sloc": self.total_sloc,
            "employees": self.employees,
            "industry_segment": self.industry_segment,
            "inception_year": self.inception_year,
            "dominant_language": self.dominant_language,
            "per_language": {
                k: {"health": h, "sloc": s} for k, (h, s) in sorted(self.per_language.items())
            },
            "ingested_at": self.ingested_at,
        }

    @classmethod
    def from_doc(cls, doc: dict) -> "ProjectRecord":
        if doc.get("schema_version") != STORE_SCHEMA_VERSION:
            raise SchemaMismatchError(
                f"unsupported store schema_version: {doc.get('schema_version')!r}"
            )
        return cls(
            record_id=doc["record_id"],
            project_id=doc["project_id"],
            as_of=doc["as_of"],
            org_id=doc["org_id"],
            avg_health=doc["avg_health"],
            hotspot_health=doc["hotspot_health"],
            total_sloc=doc["total_sloc"],
            employees=doc["employees"],
            industry_segment=doc["industry_segment"],
            inception_year=doc["inception_year"],
            dominant_language=doc["dominant_language"],
            per_language={
                k: (v["health"], v["sloc"]) for k, v in doc["per_language"].items()
            },
            ingested_at=doc["ingested_at"],
        )


def classify(record: ProjectRecord, rules: SegmentRules | None = None) -> SegmentLabels:
    """Deterministic segment labels; Unknown absorbs missing metadata."""
    r = rules or default_segment_rules()
    sloc = record.total_sloc
    if sloc <= r.codebase_small_max:
        codebase = SMALL
    elif sloc <= r.codebase_medium_max:
        codebase = MEDIUM
    else:
        codebase = LARGE

    e = record.employees
    if e is None:
        company = UNKNOWN
    elif r.company_small_min <= e <= r.company_small_max:
        company = SMALL
    elif e <= r.company_medium_max:
        company = MEDIUM
    else:
        company = LARGE

    year = record.inception_year
    if year >= r.greenfield_min_year:
        age = GREENFIELD
    elif year >= r.brownfield_min_year:
        age = BROWNFIELD
    else:
        age = LEGACY

    if record.industry_segment is None:
        cluster = UNKNOWN
    else:
        cluster = r.cluster_map.get(_normalize_segment(record.industry_segment), UNKNOWN)
    return SegmentLabels(codebase_size=codebase, company_size=company, age=age, cluster=cluster)


@dataclass(frozen=True)
class OrgMetadata:
    org_id: str
    employees: int | None
    industry_segment: str | None


def load_metadata_csv(path: str) -> dict[str, OrgMetadata]:
    """CSV with header org_id, employees, industry_segment; blanks mean unknown."""
    table: dict[str, OrgMetadata] = {}
    with open(path, newline="", encoding="utf-8") as fh:
        for row in csv.DictReader(fh):
            org = (row.get("org_id") or "").strip()
            if not org:
                continue
            raw = (row.get("employees") or "").strip()
            employees = int(raw) if raw else None
            if employees is not None and employees < 10:
                employees = None  # below the sampling floor; treat as unreported
            segment = (row.get("industry_segment") or "").strip() or None
            table[org] = OrgMetadata(org_id=org, employees=employees, industry_segment=segment)
    return table


class QueryRow(NamedTuple):
    value: float
    weight: float
    labels: SegmentLabels
    record: ProjectRecord


def _canonical_line(doc: dict) -> str:
    return json.dumps(doc, sort_keys=True, separators=(",", ":"), ensure_ascii=False)


def _dominant_language(per_language: dict[str, tuple[float, int]]) -> str:
    # Most SLoC wins; ties go to the lexicographically smallest name.
    return min(per_language.items(), key=lambda kv: (-kv[1][1], kv[0]))[0]


class BenchStore:
    """Single-writer, multi-reader store of project records."""

    def __init__(self, path: str | None = None, rules: SegmentRules | None = None):
        self.path = path
        self.rules = rules or default_segment_rules()
        self._records: dict[tuple[str, str], ProjectRecord] = {}
        self._lock = threading.Lock()

    @classmethod
    def load(cls, path: str, rules: SegmentRules | None = None) -> "BenchStore":
        store = cls(path=path, rules=rules)
        if os.path.exists(path):
            with open(path, encoding="utf-8") as fh:
                for line in fh:
                    line = line.strip()
                    if not line:
                        continue
                    record = ProjectRecord.from_doc(json.loads(line))
                    store._records[(record.project_id, record.as_of)] = record
        return store

    def records(self) -> tuple[ProjectRecord, ...]:
        return tuple(self._records.values())

    def ingest(
        self,
        analysis_doc: dict,
        org_id: str,
        metadata: OrgMetadata | None = None,
        ingested_at: datetime | None = None,
    ) -> ProjectRecord:
        """Append one record; re-ingesting the same (project_id, as_of) replaces it."""
        validate_analysis_doc(analysis_doc)
        if not org_id:
            raise ValueError("org_id required")
        when = (ingested_at or datetime.now(timezone.utc)).isoformat()
        inception_year = datetime.fromisoformat(analysis_doc["inception"]).year
        if inception_year > datetime.fromisoformat(when).year:
            raise SchemaMismatchError("inception is in the future")
        per_language = {
            k: (v["health"], v["sloc"]) for k, v in analysis_doc["per_language"].items()
        }
        if not per_language:
            raise SchemaMismatchError("analysis document has no per-language entries")
        record = ProjectRecord(
            record_id=f"{analysis_doc['project_id']}@{analysis_doc['as_of']}",
            project_id=analysis_doc["project_id"],
            as_of=analysis_doc["as_of"],
            org_id=org_id,
            avg_health=analysis_doc["avg_health"],
            hotspot_health=analysis_doc.get("hotspot_health"),
            total_sloc=analysis_doc["total_sloc"],
            employees=metadata.employees if metadata else None,
            industry_segment=metadata.industry_segment if metadata else None,
            inception_year=inception_year,
            dominant_language=_dominant_language(per_language),
            per_language=per_language,
            ingested_at=when,
        )
        with self._lock:
            self._records[(record.project_id, record.as_of)] = record
            if self.path is not None:
                with open(self.path, "a", encoding="utf-8") as fh:
                    fh.write(_canonical_line(record.to_doc()) + "\n")
        return record

    def query(
        self, filters: dict[str, str] | None, metric: str, weighting: str
    ) -> list[QueryRow]:
        """Matching records with the metric defined; weight 1 (raw) or SLoC."""
        if metric not in METRICS:
            raise ValueError(f"unknown metric: {metric!r}")
        if weighting not in WEIGHTINGS:
            raise ValueError(f"unknown weighting: {weighting!r}")
        filters = filters or {}
        for dim in filters:
            if dim not in FILTER_DIMENSIONS:
                raise ValueError(f"unknown filter dimension: {dim!r}")
        rows: list[QueryRow] = []
        for record in self._records.values():
            labels = classify(record, self.rules)
            if not _matches(labels, record, filters):
                continue
            value = getattr(record, metric)
            if value is None:
                continue
            weight = 1.0 if weighting == "raw" else float(record.total_sloc)
            rows.append(QueryRow(value=value, weight=weight, labels=labels, record=record))
        return rows

    def dump_canonical(self) -> str:
        """Compacted store content: one canonical line per live record."""
        return "".join(_canonical_line(r.to_doc()) + "\n" for r in self._records.values())

    def save(self, path: str | None = None) -> None:
        target = path or self.path
        if target is None:
            raise ValueError("no store path")
        with open(target, "w", encoding="utf-8") as fh:
            fh.write(self.dump_canonical())

    def segment_catalog(self) -> dict:
        """Dimensions and selectable labels, for clients building filters."""
        languages = sorted({r.dominant_language for r in self._records.values()})
        clusters = sorted(set(self.rules.cluster_map.values()))
        return {
            "metrics": list(METRICS),
            "weightings": list(WEIGHTINGS),
            "dimensions": {
                "cluster": clusters + [UNKNOWN],
                "codebase_size": [SMALL, MEDIUM, LARGE],
                "company_size": [SMALL, MEDIUM, LARGE, UNKNOWN],
                "age": [GREENFIELD, BROWNFIELD, LEGACY],
                "language": languages,
            },
        }


def _matches(labels: SegmentLabels, record: ProjectRecord, filters: dict[str, str]) -> bool:
    for dim, wanted in filters.items():
        if dim == "language":
            if record.dominant_language != wanted:
                return False
        elif getattr(labels, dim) != wanted:
            return False
    return True
