/** Payload shapes served by the /api/v1 endpoints (see docs/SCHEMAS.md). */

export interface Envelope<T = unknown> {
  status: "ok" | "error";
  schema_version: number;
  payload?: T;
  code?: string;
  message?: string;
}

export interface SegmentCatalog {
  metrics: string[];
  weightings: string[];
  dimensions: Record<string, string[]>;
}

export interface SegmentLabels {
  codebase_size: string;
  company_size: string;
  age: string;
  cluster: string;
}

export interface BoardEntry {
  rank: number;
  handle: string;
  points: number;
  metric_value: number;
  band: "leader" | "mid" | "laggard";
  labels: SegmentLabels;
}

export interface BoardPayload {
  schema_version: number;
  query: { metric: string; weighting: string; filters: Record<string, string> };
  advisories: string[];
  thresholds: { p10: number; p90: number };
  entries: BoardEntry[];
  density_summary: {
    mode: number;
    p10: number;
    p90: number;
    bandwidth: number;
    n: number;
    mass: number;
  };
}

export interface DensityPayload {
  schema_version: number;
  metric: string;
  weighting: string;
  filters: Record<string, string>;
  n: number;
  bandwidth: number;
  mode: number;
  p10: number;
  p90: number;
  mass: number;
  grid: number[];
  density: number[];
}
