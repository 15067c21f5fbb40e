"""HTTP facade: versioned JSON API over one benchmark store.

Read endpoints see the store snapshot at request start; POST /projects is
the only mutation and is serialized by the store's writer lock. Unknown or
repeated query parameters are rejected rather than ignored.
"""

from __future__ import annotations

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from .analysis import validate_analysis_doc
from .benchstore import FILTER_DIMENSIONS, BenchStore, OrgMetadata
from .errors import EmptySegmentError, SchemaMismatchError
from .service import (
    API_SCHEMA_VERSION,
    board_doc,
    density_doc,
    normalize_filters,
    normalize_metric,
    normalize_weighting,
)

_QUERY_KEYS = ("metric", "weighting", *FILTER_DIMENSIONS)


def _ok(payload) -> dict:
    return {"status": "ok", "schema_version": API_SCHEMA_VERSION, "payload": payload}


def _error(status_code: int, code: str, message: str) -> JSONResponse:
    return JSONResponse(
        status_code=status_code,
        content={
            "status": "error",
            "schema_version": API_SCHEMA_VERSION,
            "code": code,
            "message": message,
        },
    )


def _read_query(request: Request) -> tuple[str, str, dict[str, str]]:
    params = request.query_params
    for key in params.keys():
        if key not in _QUERY_KEYS:
            raise ValueError(f"unknown parameter: {key!r}")
        if len(params.getlist(key)) > 1:
            raise ValueError(f"repeated parameter: {key!r}")
    metric = normalize_metric(params.get("metric", "avg_health"))
    weighting = normalize_weighting(params.get("weighting", "raw"))
    filters = normalize_filters(
        {dim: params[dim] for dim in FILTER_DIMENSIONS if dim in params}
    )
    return metric, weighting, filters


def create_app(store: BenchStore, salt: str) -> FastAPI:
    if not salt:
        raise ValueError("empty salt")
    app = FastAPI(title="healthbench", docs_url=None, redoc_url=None)

    @app.get("/api/v1/segments")
    def segments():
        return _ok(store.segment_catalog())

    @app.get("/api/v1/distribution")
    def distribution(request: Request):
        try:
            metric, weighting, filters = _read_query(request)
        except ValueError as exc:
            return _error(400, "bad_parameter", str(exc))
        try:
            return _ok(density_doc(store, metric, weighting, filters))
        except EmptySegmentError:
            return _error(404, "empty_segment", "no records match this segment")

    @app.get("/api/v1/leaderboard")
    def leaderboard(request: Request):
        try:
            metric, weighting, filters = _read_query(request)
        except ValueError as exc:
            return _error(400, "bad_parameter", str(exc))
        try:
            return _ok(board_doc(store, metric, weighting, filters, salt))
        except EmptySegmentError:
            return _error(404, "empty_segment", "no records match this segment")

    @app.post("/api/v1/projects")
    async def ingest(request: Request):
        try:
            body = await request.json()
        except Exception:
            return _error(400, "schema_mismatch", "request body is not valid JSON")
        if not isinstance(body, dict):
            return _error(400, "schema_mismatch", "request body must be an object")
        analysis = body.get("analysis")
        org_id = body.get("org_id")
        if not isinstance(analysis, dict) or not org_id:
            return _error(400, "schema_mismatch", "body requires 'analysis' and 'org_id'")
        metadata = None
        raw_meta = body.get("metadata")
        if raw_meta is not None:
            if not isinstance(raw_meta, dict):
                return _error(400, "schema_mismatch", "'metadata' must be an object")
            metadata = OrgMetadata(
                org_id=org_id,
                employees=raw_meta.get("employees"),
                industry_segment=raw_meta.get("industry_segment"),
            )
        try:
            validate_analysis_doc(analysis)
            record = store.ingest(analysis, org_id=org_id, metadata=metadata)
        except SchemaMismatchError as exc:
            return _error(400, "schema_mismatch", str(exc))
        except (KeyError, TypeError, ValueError) as exc:
            return _error(400, "schema_mismatch", f"malformed analysis document: {exc}")
        return _ok(
            {
                "record_id": record.record_id,
                "project_id": record.project_id,
                "as_of": record.as_of,
                "ingested_at": record.ingested_at,
            }
        )

    return app
