/** Filter state and its URL query-string codec.
 *
 * The whole view state lives in the URL so links are shareable: metric and
 * weighting always appear (canonical order), dimension filters only when
 * set. encode(decode(url)) is the identity for every canonical URL.
 */

export const DIMENSIONS = [
  "cluster",
  "codebase_size",
  "company_size",
  "age",
  "language",
] as const;

export type Dimension = (typeof DIMENSIONS)[number];
export type Metric = "avg_health" | "hotspot_health";
export type Weighting = "raw" | "sloc";

export interface FilterState {
  metric: Metric;
  weighting: Weighting;
  filters: Partial<Record<Dimension, string>>;
}

const METRICS: Metric[] = ["avg_health", "hotspot_health"];
const WEIGHTINGS: Weighting[] = ["raw", "sloc"];

export function defaultState(): FilterState {
  // Hotspot health is the headline success metric of the game design.
  return { metric: "hotspot_health", weighting: "raw", filters: {} };
}

export function encodeState(state: FilterState): string {
  const params = new URLSearchParams();
  params.set("metric", state.metric);
  params.set("weighting", state.weighting);
  for (const dim of DIMENSIONS) {
    const value = state.filters[dim];
    if (value) {
      params.set(dim, value);
    }
  }
  return params.toString();
}

export function decodeState(query: string): FilterState {
  const params = new URLSearchParams(query.replace(/^\?/, ""));
  const state = defaultState();
  const metric = params.get("metric");
  if (metric && (METRICS as string[]).includes(metric)) {
    state.metric = metric as Metric;
  }
  const weighting = params.get("weighting");
  if (weighting && (WEIGHTINGS as string[]).includes(weighting)) {
    state.weighting = weighting as Weighting;
  }
  for (const dim of DIMENSIONS) {
    const value = params.get(dim);
    if (value) {
      state.filters[dim] = value;
    }
  }
  return state;
}

export function statesEqual(a: FilterState, b: FilterState): boolean {
  return encodeState(a) === encodeState(b);
}
