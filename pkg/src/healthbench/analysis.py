"""Project-level analysis: per-file scoring composed with churn mining into
SLoC-weighted average health, hotspot health, and per-language aggregates."""

from __future__ import annotations

import json
import math
import os
import subprocess
from dataclasses import dataclass, field
from datetime import datetime, timezone

from . import churn as churn_mod
from . import lang as lang_mod
from . import smells as smells_mod
from .errors import NoAnalyzableFilesError, NoWeightedMassError, RepoAccessError
from .lang import Registry
from .smells import SmellConfig, SmellReport

ANALYSIS_SCHEMA_VERSION = 1

# Vendored bulk would distort SLoC weights; segments here are skipped by default.
DEFAULT_IGNORED_DIRS = frozenset(
    {"node_modules", "vendor", "third_party", "dist", "build", ".git"}
)
DEFAULT_IGNORED_SUFFIXES = (".min.js", ".min.css")


@dataclass(frozen=True)
class FileMetrics:
    path: str
    language: str
    sloc: int
    smells: SmellReport
    health: float


@dataclass
class ProjectAnalysis:
    project_id: str
    as_of: datetime
    inception: datetime
    files: list[FileMetrics]
    hotspots: set[str]
    total_sloc: int
    avg_health: float
    hotspot_health: float | None
    per_language: dict[str, tuple[float, int]]
    diagnostics: list[str] = field(default_factory=list)

    def to_doc(self) -> dict:
        """JSON-ready document; the unit of ingestion for the benchmark store."""
        return {
            "schema_version": ANALYSIS_SCHEMA_VERSION,
            "project_id": self.project_id,
            "as_of": self.as_of.isoformat(),
            "inception": self.inception.isoformat(),
            "total_sloc": self.total_sloc,
            "avg_health": self.avg_health,
            "hotspot_health": self.hotspot_health,
            "hotspots": sorted(self.hotspots),
            "per_language": {
                name: {"health": health, "sloc": sloc}
                for name, (health, sloc) in sorted(self.per_language.items())
            },
            "files": [
                {
                    "path": f.path,
                    "language": f.language,
                    "sloc": f.sloc,
                    "health": f.health,
                    "smells": dict(sorted(f.smells.counts.items())),
                }
                for f in self.files
            ],
            "diagnostics": list(self.diagnostics),
        }


def weighted_average_health(files: list[FileMetrics]) -> float:
    """SLoC-weighted mean health; zero-sloc files carry no weight."""
    weighted = [(f.health, f.sloc) for f in files if f.sloc > 0]
    if not weighted:
        raise NoWeightedMassError("no weighted mass")
    num = math.fsum(h * s for h, s in weighted)
    den = math.fsum(s for _, s in weighted)
    return num / den


def hotspot_health(
    files: list[FileMetrics],
    hotspots: set[str],
    diagnostics: list[str] | None = None,
) -> float | None:
    """Weighted mean restricted to hotspot files, or None without weighted mass."""
    known = {f.path for f in files}
    for missing in sorted(hotspots - known):
        if diagnostics is not None:
            diagnostics.append(f"hotspot not analyzable: {missing}")
    subset = [f for f in files if f.path in hotspots]
    try:
        return weighted_average_health(subset)
    except NoWeightedMassError:
        return None


def per_language_aggregate(files: list[FileMetrics]) -> dict[str, tuple[float, int]]:
    """Per-language (weighted health, total sloc); zero-mass languages omitted."""
    by_language: dict[str, list[FileMetrics]] = {}
    for f in files:
        by_language.setdefault(f.language, []).append(f)
    out: dict[str, tuple[float, int]] = {}
    for name in sorted(by_language):
        group = by_language[name]
        try:
            score = weighted_average_health(group)
        except NoWeightedMassError:
            continue
        out[name] = (score, sum(f.sloc for f in group))
    return out


def _tracked_files(repo: str) -> list[str]:
    try:
        proc = subprocess.run(
            ["git", "-C", repo, "ls-files", "-z"],
            capture_output=True,
            text=True,
            timeout=120,
        )
    except OSError as exc:
        raise RepoAccessError(f"repo access: {exc}") from exc
    if proc.returncode != 0:
        raise RepoAccessError(f"repo access: {proc.stderr.strip()}")
    return sorted(p for p in proc.stdout.split("\0") if p)


def _ignored(path: str) -> bool:
    if any(seg in DEFAULT_IGNORED_DIRS for seg in path.split("/")[:-1]):
        return True
    return path.endswith(DEFAULT_IGNORED_SUFFIXES)


def analyze_file(
    path: str,
    source: str,
    profile: lang_mod.LanguageProfile,
    config: SmellConfig | None = None,
    diagnostics: list[str] | None = None,
) -> FileMetrics | None:
    """Score one file, or None when it has no countable source lines."""
    local: list[str] = []
    counts = lang_mod.count_sloc(source, profile, diagnostics=local)
    if counts.sloc == 0:
        if diagnostics is not None:
            diagnostics.append(f"no source lines: {path}")
        return None
    stripped = lang_mod.strip_comments_and_strings(source, profile)
    functions = smells_mod.extract_functions(stripped, profile, diagnostics=local)
    report = smells_mod.detect_smells(counts, functions, stripped, profile, config)
    health = smells_mod.score_code_health(report, counts.sloc, config)
    if diagnostics is not None:
        diagnostics.extend(f"{path}: {d}" for d in local)
    return FileMetrics(
        path=path,
        language=profile.name,
        sloc=counts.sloc,
        smells=report,
        health=health.score,
    )


def analyze_project(
    repo: str,
    as_of: datetime,
    project_id: str,
    registry: Registry | None = None,
    smell_config: SmellConfig | None = None,
) -> ProjectAnalysis:
    """Full pipeline over one repository at a fixed as_of instant.

    Files are processed in canonical path order so results are identical
    regardless of scheduling.
    """
    reg = registry or lang_mod.default_registry()
    churn_map, inception = churn_mod.mine_history(repo, as_of)
    diagnostics: list[str] = []

    files: list[FileMetrics] = []
    for path in _tracked_files(repo):
        if _ignored(path):
            continue
        profile = reg.detect_language(path)
        if profile is None:
            continue
        full = os.path.join(repo, path)
        try:
            with open(full, "rb") as fh:
                source = fh.read().decode("utf-8", errors="replace")
        except OSError:
            diagnostics.append(f"unreadable: {path}")
            continue
        metrics = analyze_file(path, source, profile, smell_config, diagnostics)
        if metrics is not None:
            files.append(metrics)

    if not files:
        raise NoAnalyzableFilesError("no analyzable files")

    hotspots = churn_mod.select_hotspots(churn_map)
    return ProjectAnalysis(
        project_id=project_id,
        as_of=as_of,
        inception=inception,
        files=files,
        hotspots=hotspots,
        total_sloc=sum(f.sloc for f in files),
        avg_health=weighted_average_health(files),
        hotspot_health=hotspot_health(files, hotspots, diagnostics),
        per_language=per_language_aggregate(files),
        diagnostics=diagnostics,
    )


def load_analysis_doc(path: str) -> dict:
    """Read and schema-check an analysis document from disk."""
    with open(path, encoding="utf-8") as fh:
        doc = json.load(fh)
    validate_analysis_doc(doc)
    return doc


def validate_analysis_doc(doc: dict) -> None:
    from .errors import SchemaMismatchError

    if not isinstance(doc, dict) or doc.get("schema_version") != ANALYSIS_SCHEMA_VERSION:
        raise SchemaMismatchError(
            f"unsupported analysis schema_version: {doc.get('schema_version') if isinstance(doc, dict) else type(doc).__name__}"
        )
    required = {"project_id", "as_of", "inception", "total_sloc", "avg_health", "per_language"}
    missing = required - doc.keys()
    if missing:
        raise SchemaMismatchError(f"analysis document missing fields: {sorted(missing)}")


def utc_midnight_today() -> datetime:
    now = datetime.now(timezone.utc)
    return now.replace(hour=0, minute=0, second=0, microsecond=0)
