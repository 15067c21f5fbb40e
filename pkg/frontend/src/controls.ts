/** Filter controls built from the /segments catalog. Every change produces
 * a fresh FilterState through the onChange callback; only labels the
 * catalog advertises are selectable. */

import { DIMENSIONS, type Dimension, type FilterState, type Metric, type Weighting } from "./state.js";
import type { SegmentCatalog } from "./types.js";

export function buildControls(
  doc: Document,
  catalog: SegmentCatalog,
  state: FilterState,
  onChange: (next: FilterState) => void,
): HTMLElement {
  const root = doc.createElement("form");
  root.className = "controls";

  root.appendChild(
    select(doc, "metric", catalog.metrics, state.metric, false, (value) => {
      onChange({ ...state, metric: value as Metric });
    }),
  );
  root.appendChild(
    select(doc, "weighting", catalog.weightings, state.weighting, false, (value) => {
      onChange({ ...state, weighting: value as Weighting });
    }),
  );
  for (const dim of DIMENSIONS) {
    const labels = catalog.dimensions[dim] ?? [];
    root.appendChild(
      select(doc, dim, labels, state.filters[dim] ?? "", true, (value) => {
        const filters = { ...state.filters };
        if (value) {
          filters[dim as Dimension] = value;
        } else {
          delete filters[dim as Dimension];
        }
        onChange({ ...state, filters });
      }),
    );
  }

  const clear = doc.createElement("button");
  clear.type = "button";
  clear.className = "clear-filters";
  clear.textContent = "Clear filters";
  clear.addEventListener("click", () => onChange({ ...state, filters: {} }));
  root.appendChild(clear);
  return root;
}

function select(
  doc: Document,
  name: string,
  labels: string[],
  current: string,
  withAll: boolean,
  onChange: (value: string) => void,
): HTMLElement {
  const wrap = doc.createElement("label");
  wrap.className = `control control-${name}`;
  wrap.textContent = name.replace("_", " ");

  const el = doc.createElement("select");
  el.name = name;
  if (withAll) {
    const opt = doc.createElement("option");
    opt.value = "";
    opt.textContent = "All";
    el.appendChild(opt);
  }
  for (const label of labels) {
    const opt = doc.createElement("option");
    opt.value = label;
    opt.textContent = label;
    if (label === current) {
      opt.selected = true;
    }
    el.appendChild(opt);
  }
  el.addEventListener("change", () => onChange(el.value));
  wrap.appendChild(el);
  return wrap;
}
