import { describe, expect, it } from "vitest";

import { renderBoard } from "../src/board.js";
import type { BoardPayload, Envelope } from "../src/types.js";
import boardEmpty from "./fixtures/board_empty.json";
import boardFull from "./fixtures/board_full.json";
import boardThree from "./fixtures/board_three.json";

const three = boardThree as Envelope<BoardPayload>;
const full = boardFull as Envelope<BoardPayload>;
const empty = boardEmpty as Envelope<BoardPayload>;

describe("renderBoard", () => {
  it("renders recorded three-entry board in rank order", () => {
    const el = renderBoard(document, three);
    const rows = el.querySelectorAll("tr.entry");
    expect(rows.length).toBe(3);
    const ranks = [...rows].map((r) => r.querySelector("td")?.textContent);
    expect(ranks).toEqual(["1", "2", "3"]);
    const payload = three.payload as BoardPayload;
    const handles = [...rows].map((r) => r.querySelectorAll("td")[1].textContent);
    expect(handles).toEqual(payload.entries.map((e) => e.handle));
  });

  it("displays points and ranks verbatim from the payload", () => {
    const el = renderBoard(document, full);
    const payload = full.payload as BoardPayload;
    const rows = el.querySelectorAll("tr.entry");
    expect(rows.length).toBe(payload.entries.length);
    [...rows].forEach((row, i) => {
      const cells = row.querySelectorAll("td");
      expect(cells[0].textContent).toBe(String(payload.entries[i].rank));
      expect(cells[2].textContent).toBe(String(payload.entries[i].points));
    });
  });

  it("marks leader rows distinctly from laggard rows", () => {
    const el = renderBoard(document, full);
    expect(el.querySelectorAll("tr.band-leader").length).toBeGreaterThan(0);
    expect(el.querySelectorAll("tr.band-laggard").length).toBeGreaterThan(0);
    const leader = el.querySelector("tr.band-leader");
    expect(leader?.classList.contains("band-laggard")).toBe(false);
  });

  it("shows an empty state without a table for empty segments", () => {
    const el = renderBoard(document, empty);
    expect(el.querySelector(".empty-state")?.textContent).toContain("No data");
    expect(el.querySelector("table")).toBeNull();
  });

  it("surfaces the small-segment advisory when flagged", () => {
    const withFlag = renderBoard(document, three);
    expect(withFlag.querySelector(".advisory")?.textContent).toContain("Small segment");
    const withoutFlag = renderBoard(document, full);
    expect(withoutFlag.querySelector(".advisory")).toBeNull();
  });
});
