/** Leaderboard table rendering. Ranks and points are displayed verbatim;
 * nothing from the payload is recomputed client-side. */

import type { BoardPayload, Envelope } from "./types.js";

const ADVISORY_TEXT: Record<string, string> = {
  small_segment: "Small segment: percentile thresholds are indicative only.",
};

export function renderBoard(doc: Document, envelope: Envelope<BoardPayload>): HTMLElement {
  const root = doc.createElement("section");
  root.className = "board";

  if (envelope.status === "error") {
    root.appendChild(emptyState(doc, envelope));
    return root;
  }
  const payload = envelope.payload as BoardPayload;

  for (const advisory of payload.advisories) {
    const note = doc.createElement("p");
    note.className = "advisory";
    note.textContent = ADVISORY_TEXT[advisory] ?? advisory;
    root.appendChild(note);
  }

  const thresholds = doc.createElement("p");
  thresholds.className = "thresholds";
  thresholds.textContent =
    `laggards ≤ ${payload.thresholds.p10.toFixed(2)}` +
    ` · leaders ≥ ${payload.thresholds.p90.toFixed(2)}`;
  root.appendChild(thresholds);

  const table = doc.createElement("table");
  table.className = "board-table";
  const head = doc.createElement("tr");
  for (const label of ["#", "Organization", "Points", "Band"]) {
    const th = doc.createElement("th");
    th.textContent = label;
    head.appendChild(th);
  }
  table.appendChild(head);

  for (const entry of payload.entries) {
    const row = doc.createElement("tr");
    row.className = `entry band-${entry.band}`;
    const cells = [
      String(entry.rank),
      entry.handle,
      String(entry.points),
      entry.band,
    ];
    for (const text of cells) {
      const td = doc.createElement("td");
      td.textContent = text;
      row.appendChild(td);
    }
    table.appendChild(row);
  }
  root.appendChild(table);
  return root;
}

export function emptyState(doc: Document, envelope: Envelope): HTMLElement {
  const note = doc.createElement("p");
  note.className = "empty-state";
  note.textContent =
    envelope.code === "empty_segment"
      ? "No data for this segment."
      : `Request failed: ${envelope.message ?? envelope.code ?? "unknown error"}`;
  return note;
}
