/** Application wiring: URL <-> state, catalog-driven controls, and one
 * fetch per view per state change. Browser back/forward replays states. */

import { HttpClient, type Fetcher } from "./api.js";
import { renderBoard } from "./board.js";
import { buildControls } from "./controls.js";
import { renderDensity } from "./density.js";
import { decodeState, encodeState, type FilterState } from "./state.js";
import type { BoardPayload, DensityPayload, Envelope, SegmentCatalog } from "./types.js";

export class App {
  private state: FilterState;
  private catalog: SegmentCatalog | null = null;
  private controlsHost: HTMLElement;
  private boardHost: HTMLElement;
  private densityHost: HTMLElement;

  constructor(
    private win: Window,
    private root: HTMLElement,
    private client: Fetcher,
  ) {
    this.state = decodeState(win.location.search);
    this.controlsHost = this.section("controls-host");
    this.densityHost = this.section("density-host");
    this.boardHost = this.section("board-host");
  }

  private section(className: string): HTMLElement {
    const el = this.win.document.createElement("div");
    el.className = className;
    this.root.appendChild(el);
    return el;
  }

  async start(): Promise<void> {
    const segments = await this.client.get("/api/v1/segments", "", "segments");
    if (segments.status !== "ok") {
      this.root.textContent = "Segment catalog unavailable.";
      return;
    }
    this.catalog = segments.payload as SegmentCatalog;
    this.win.addEventListener("popstate", () => {
      this.state = decodeState(this.win.location.search);
      this.renderControls();
      void this.refresh();
    });
    this.renderControls();
    await this.refresh();
  }

  /** Control changes push a new URL entry, then refetch both views. */
  setState(next: FilterState): Promise<void> {
    this.state = next;
    this.win.history.pushState(null, "", `?${encodeState(next)}`);
    this.renderControls();
    return this.refresh();
  }

  private renderControls(): void {
    if (!this.catalog) {
      return;
    }
    this.controlsHost.replaceChildren(
      buildControls(this.win.document, this.catalog, this.state, (next) => {
        void this.setState(next);
      }),
    );
  }

  private async refresh(): Promise<void> {
    const query = encodeState(this.state);
    const [board, density] = await Promise.all([
      this.client.get("/api/v1/leaderboard", query, "board") as Promise<Envelope<BoardPayload>>,
      this.client.get("/api/v1/distribution", query, "density") as Promise<
        Envelope<DensityPayload>
      >,
    ]);
    this.boardHost.replaceChildren(renderBoard(this.win.document, board));
    this.densityHost.replaceChildren(renderDensity(this.win.document, density));
  }
}

export function boot(): void {
  const root = document.getElementById("app");
  if (root) {
    void new App(window, root, new HttpClient()).start();
  }
}

if (typeof document !== "undefined" && document.getElementById("app")) {
  boot();
}
