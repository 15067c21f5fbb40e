/** Thin API client. One in-flight request per view: a newer filter state
 * aborts the previous fetch for that view before issuing its own. */

import type { Envelope } from "./types.js";

export interface Fetcher {
  get(path: string, query: string, view: string): Promise<Envelope>;
}

export class HttpClient implements Fetcher {
  private inflight = new Map<string, AbortController>();

  constructor(private base: string = "") {}

  async get(path: string, query: string, view: string): Promise<Envelope> {
    this.inflight.get(view)?.abort();
    const controller = new AbortController();
    this.inflight.set(view, controller);
    const url = query ? `${this.base}${path}?${query}` : `${this.base}${path}`;
    const response = await fetch(url, { signal: controller.signal });
    return (await response.json()) as Envelope;
  }
}
