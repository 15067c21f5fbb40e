import { describe, expect, it } from "vitest";

import {
  DIMENSIONS,
  decodeState,
  defaultState,
  encodeState,
  type FilterState,
} from "../src/state.js";

const SAMPLE_STATES: FilterState[] = [
  defaultState(),
  { metric: "avg_health", weighting: "sloc", filters: {} },
  { metric: "hotspot_health", weighting: "raw", filters: { cluster: "C-A" } },
  {
    metric: "avg_health",
    weighting: "raw",
    filters: { codebase_size: "Large", age: "Legacy", language: "python" },
  },
  {
    metric: "hotspot_health",
    weighting: "sloc",
    filters: {
      cluster: "C-C",
      codebase_size: "Small",
      company_size: "Unknown",
      age: "Greenfield",
      language: "typescript",
    },
  },
];

describe("filter state URL codec", () => {
  it("round-trips every canonical URL: encode(decode(url)) === url", () => {
    for (const state of SAMPLE_STATES) {
      const url = encodeState(state);
      expect(encodeState(decodeState(url))).toBe(url);
    }
  });

  it("round-trips states: decode(encode(s)) semantically equals s", () => {
    for (const state of SAMPLE_STATES) {
      const back = decodeState(encodeState(state));
      expect(back.metric).toBe(state.metric);
      expect(back.weighting).toBe(state.weighting);
      expect(back.filters).toEqual(state.filters);
    }
  });

  it("keeps metric and weighting first, dimensions in canonical order", () => {
    const url = encodeState(SAMPLE_STATES[4]);
    const keys = [...new URLSearchParams(url).keys()];
    expect(keys).toEqual(["metric", "weighting", ...DIMENSIONS]);
  });

  it("defaults unknown or missing values", () => {
    const state = decodeState("?metric=banana&weighting=raw&planet=mars");
    expect(state.metric).toBe(defaultState().metric);
    expect(state.weighting).toBe("raw");
    expect(state.filters).toEqual({});
  });

  it("clearing all filters yields the wildcard query", () => {
    const cleared = { ...SAMPLE_STATES[4], filters: {} };
    expect(encodeState(cleared)).toBe("metric=hotspot_health&weighting=sloc");
  });

  it("leading question mark is tolerated", () => {
    const url = encodeState(SAMPLE_STATES[2]);
    expect(decodeState(`?${url}`)).toEqual(decodeState(url));
  });
});
