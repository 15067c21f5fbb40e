#!/usr/bin/env python3
"""Build a synthetic benchmark store for demos and manual exploration.

Creates demo/store.jsonl plus demo/orgs.csv, then prints one density summary
per segmentation dimension. Handy before pointing the CLI or the web UI at
real analyses:

    python3 scripts/make_demo_store.py
    healthbench bench --store demo/store.jsonl --weighting sloc
    HEALTHBENCH_SALT=demo healthbench serve --store demo/store.jsonl
"""

import random
from datetime import datetime, timezone
from pathlib import Path

from healthbench.benchstore import BenchStore, OrgMetadata
from healthbench.service import density_doc

SEGMENTS = [
    "retail", "hospitality", "real estate", "consumer goods",
    "insurance", "financial services", "design", "legal services",
    "computer software", "telecommunications", "automotive", "biotechnology",
]
LANGUAGES = ["python", "javascript", "java", "csharp", "go", "cpp", "php", "typescript"]


def synth_doc(rng, i):
    # Mostly healthy with a long left tail, mirroring industrial score shapes.
    avg = min(10.0, max(1.0, 10.0 - rng.expovariate(1.2)))
    hotspot = min(10.0, max(1.0, avg - abs(rng.gauss(0.8, 0.9))))
    sloc = int(rng.lognormvariate(10.0, 1.3)) + 200
    language = rng.choice(LANGUAGES)
    year = rng.choice(range(2008, 2026))
    return {
        "schema_version": 1,
        "project_id": f"demo-project-{i:04d}",
        "as_of": "2026-08-01T00:00:00+00:00",
        "inception": f"{year}-03-15T00:00:00+00:00",
        "total_sloc": sloc,
        "avg_health": round(avg, 4),
        "hotspot_health": round(hotspot, 4) if rng.random() > 0.15 else None,
        "hotspots": [],
        "per_language": {language: {"health": round(avg, 4), "sloc": sloc}},
        "files": [],
        "diagnostics": [],
    }


def main():
    rng = random.Random(20260801)
    out = Path("demo")
    out.mkdir(exist_ok=True)
    store_path = out / "store.jsonl"
    store_path.unlink(missing_ok=True)
    store = BenchStore(path=str(store_path))

    csv_lines = ["org_id,employees,industry_segment"]
    ingested = datetime(2026, 8, 1, tzinfo=timezone.utc)
    for i in range(400):
        org = f"demo-org-{i % 160:04d}"
        employees = rng.choice([None, rng.randint(10, 2000)])
        segment = rng.choice(SEGMENTS) if rng.random() < 0.4 else None
        if i % 160 == i:  # first record for this org: emit its metadata row
            csv_lines.append(f"{org},{employees or ''},{segment or ''}")
        metadata = OrgMetadata(org_id=org, employees=employees, industry_segment=segment)
        store.ingest(synth_doc(rng, i), org_id=org, metadata=metadata, ingested_at=ingested)

    (out / "orgs.csv").write_text("\n".join(csv_lines) + "\n", encoding="utf-8")
    print(f"wrote {store_path} ({len(store.records())} records) and {out / 'orgs.csv'}")

    for weighting in ("raw", "sloc"):
        doc = density_doc(store, "avg_health", weighting, {})
        print(
            f"avg_health/{weighting}: n={doc['n']} mode={doc['mode']:.2f}"
            f" p10={doc['p10']:.2f} p90={doc['p90']:.2f}"
        )


if __name__ == "__main__":
    main()
