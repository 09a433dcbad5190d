import { Client, FetchLike } from "../src/api.js";
import { Session } from "../src/state.js";
import { FIXTURES } from "./fixtures.js";

function canonical(value: unknown): string {
  if (Array.isArray(value)) {
    return "[" + value.map(canonical).join(",") + "]";
  }
  if (value !== null && typeof value === "object") {
    const entries = Object.entries(value as Record<string, unknown>)
      .sort(([a], [b]) => (a < b ? -1 : 1))
      .map(([k, v]) => JSON.stringify(k) + ":" + canonical(v));
    return "{" + entries.join(",") + "}";
  }
  return JSON.stringify(value);
}

export interface MockFetch extends FetchLike {
  calls: { url: string; body: unknown }[];
}

/** A fetch whose responses are verbatim recordings of the live service. */
export function fixtureFetch(): MockFetch {
  const calls: { url: string; body: unknown }[] = [];
  const impl = (async (url: string, init?: { body?: string }) => {
    const body = init?.body ? JSON.parse(init.body) : null;
    calls.push({ url, body });
    const key = url + " " + canonical(body);
    const hit = FIXTURES[key];
    if (!hit) {
      throw new Error(`no fixture for ${key}`);
    }
    return {
      status: hit.status,
      json: async () => hit.body,
    };
  }) as MockFetch;
  impl.calls = calls;
  return impl;
}

export function makeSession(): { session: Session; fetch: MockFetch } {
  const f = fixtureFetch();
  return { session: new Session(new Client("", f)), fetch: f };
}
