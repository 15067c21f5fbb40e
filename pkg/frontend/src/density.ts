/** Density chart: the segment's smoothed distribution over [1, 10] with
 * vertical markers at the laggard threshold (p10), leader threshold (p90),
 * and mode. Raw and SLoC-weighted curves carry distinct classes. */

import { emptyState } from "./board.js";
import type { DensityPayload, Envelope } from "./types.js";

const SVG_NS = "http://www.w3.org/2000/svg";

export const CHART = {
  width: 640,
  height: 320,
  left: 44,
  right: 16,
  top: 16,
  bottom: 30,
} as const;

export function xScale(value: number): number {
  const span = CHART.width - CHART.left - CHART.right;
  return CHART.left + ((value - 1) / 9) * span;
}

function yScale(density: number, peak: number): number {
  const span = CHART.height - CHART.top - CHART.bottom;
  return CHART.height - CHART.bottom - (density / peak) * span;
}

interface Marker {
  value: number;
  label: string;
  kind: string;
}

export function renderDensity(doc: Document, envelope: Envelope<DensityPayload>): HTMLElement {
  const root = doc.createElement("section");
  root.className = "density";
  if (envelope.status === "error") {
    root.appendChild(emptyState(doc, envelope));
    return root;
  }
  const payload = envelope.payload as DensityPayload;

  const svg = doc.createElementNS(SVG_NS, "svg");
  svg.setAttribute("viewBox", `0 0 ${CHART.width} ${CHART.height}`);
  svg.setAttribute("class", "density-chart");

  const peak = Math.max(...payload.density, 1e-12);
  const points = payload.grid.map(
    (g, i) => `${xScale(g).toFixed(2)},${yScale(payload.density[i], peak).toFixed(2)}`,
  );
  const curve = doc.createElementNS(SVG_NS, "path");
  curve.setAttribute("d", `M ${points.join(" L ")}`);
  curve.setAttribute("class", `curve curve-${payload.weighting}`);
  curve.setAttribute("fill", "none");
  svg.appendChild(curve);

  const markers: Marker[] = [
    { value: payload.p10, label: "laggards", kind: "p10" },
    { value: payload.p90, label: "leaders", kind: "p90" },
    { value: payload.mode, label: "mode", kind: "mode" },
  ];
  for (const marker of markers) {
    const x = xScale(marker.value).toFixed(2);
    const line = doc.createElementNS(SVG_NS, "line");
    line.setAttribute("x1", x);
    line.setAttribute("x2", x);
    line.setAttribute("y1", String(CHART.top));
    line.setAttribute("y2", String(CHART.height - CHART.bottom));
    line.setAttribute("class", `marker marker-${marker.kind}`);
    svg.appendChild(line);

    const text = doc.createElementNS(SVG_NS, "text");
    text.setAttribute("x", x);
    text.setAttribute("y", String(CHART.top - 4));
    text.setAttribute("class", `marker-label marker-label-${marker.kind}`);
    text.textContent = marker.label;
    svg.appendChild(text);
  }

  for (const tick of [1, 4, 7, 10]) {
    const text = doc.createElementNS(SVG_NS, "text");
    text.setAttribute("x", xScale(tick).toFixed(2));
    text.setAttribute("y", String(CHART.height - 8));
    text.setAttribute("class", "axis-tick");
    text.textContent = String(tick);
    svg.appendChild(text);
  }

  const caption = doc.createElement("p");
  caption.className = "density-caption";
  caption.textContent =
    `${payload.metric} · ${payload.weighting} · n=${payload.n}` +
    ` · mode=${payload.mode.toFixed(2)}`;

  root.appendChild(svg);
  root.appendChild(caption);
  return root;
}
