#!/usr/bin/env python3
"""Record deterministic API payloads into frontend/tests/fixtures/.

The web UI's test suite replays these instead of talking to a live
backend. Regenerate after changing any payload schema:

    python3 scripts/record_ui_fixtures.py
"""

import json
from datetime import datetime
from pathlib import Path

from fastapi.testclient import TestClient

from healthbench.api import create_app
from healthbench.benchstore import BenchStore, OrgMetadata

SALT = "ui-fixture-salt"
OUT = Path(__file__).resolve().parent.parent / "frontend" / "tests" / "fixtures"

ORG_SPECS = [
    # org, avg, hotspot, sloc, employees, segment, inception year
    ("org-alpha", 9.6, 9.1, 12_000, 40, "retail", 2023),
    ("org-bravo", 9.2, 8.4, 45_000, 130, "computer software", 2020),
    ("org-carol", 8.8, 7.2, 95_000, 700, "insurance", 2016),
    ("org-delta", 8.1, 6.0, 30_000, 55, "design", 2022),
    ("org-echo", 7.4, 5.1, 150_000, 420, "automotive", 2012),
    ("org-forte", 6.9, 4.4, 8_000, 25, "hospitality", 2024),
    ("org-golf", 6.1, 3.8, 60_000, 210, "financial services", 2019),
    ("org-hotel", 5.2, 3.1, 22_000, 95, "telecommunications", 2018),
    ("org-india", 4.4, 2.6, 110_000, 980, "construction", 2010),
    ("org-julia", 3.6, 2.2, 70_000, 300, "legal services", 2021),
    ("org-kilo", 2.9, 1.8, 18_000, 15, "biotechnology", 2025),
    ("org-lima", 2.1, 1.4, 200_000, 1500, "oil energy", 2008),
]


def build_store(specs):
    store = BenchStore()
    when = datetime.fromisoformat("2026-08-01T00:00:00+00:00")
    for org, avg, hotspot, sloc, employees, segment, year in specs:
        store.ingest(
            {
                "schema_version": 1,
                "project_id": f"project-{org}",
                "as_of": "2026-08-01T00:00:00+00:00",
                "inception": f"{year}-04-01T00:00:00+00:00",
                "total_sloc": sloc,
                "avg_health": avg,
                "hotspot_health": hotspot,
                "hotspots": [],
                "per_language": {"python": {"health": avg, "sloc": sloc}},
                "files": [],
                "diagnostics": [],
            },
            org_id=org,
            metadata=OrgMetadata(org_id=org, employees=employees, industry_segment=segment),
            ingested_at=when,
        )
    return store


def record(client, name, path, params=None):
    resp = client.get(path, params=params or {})
    body = resp.json()
    target = OUT / f"{name}.json"
    target.write_text(json.dumps(body, indent=2, sort_keys=True) + "\n", encoding="utf-8")
    print(f"wrote {target} (HTTP {resp.status_code})")


def main():
    OUT.mkdir(parents=True, exist_ok=True)
    full = TestClient(create_app(build_store(ORG_SPECS), SALT))
    record(full, "segments", "/api/v1/segments")
    record(full, "board_full", "/api/v1/leaderboard", {"metric": "avg_health"})
    record(full, "density_raw", "/api/v1/distribution",
           {"metric": "avg_health", "weighting": "raw"})
    record(full, "density_sloc", "/api/v1/distribution",
           {"metric": "avg_health", "weighting": "sloc"})
    record(full, "board_empty", "/api/v1/leaderboard",
           {"metric": "avg_health", "age": "Brownfield", "cluster": "C-A"})

    small = TestClient(create_app(build_store(ORG_SPECS[:3]), SALT))
    record(small, "board_three", "/api/v1/leaderboard", {"metric": "avg_health"})

    solo = TestClient(create_app(build_store(ORG_SPECS[:1]), SALT))
    record(solo, "density_degenerate", "/api/v1/distribution", {"metric": "avg_health"})


if __name__ == "__main__":
    main()
