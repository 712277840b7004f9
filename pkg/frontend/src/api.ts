/**
 * Thin fetch client for the focalcurves JSON API.
 *
 * URL construction is kept in pure functions so tests can pin the
 * exact query strings without a network. Error responses carry
 * {error, message} bodies; status 400 means the input was malformed
 * (parse errors), 422 means it was well-formed but mathematically
 * inapplicable.
 */

import type {
  ApiErrorBody,
  ComposeResponse,
  ImplicitResponse,
  ProbeResponse,
  Scene,
  TransformKind,
} from "./types.js";

export interface SceneQuery {
  f: string;
  /** Outer linear stage: request the composition scene g(f(x)). */
  g?: string;
  delta: number;
  range: [number, number];
  arrows: number;
  samples: number;
}

export class ApiError extends Error {
  constructor(
    readonly status: number,
    readonly body: ApiErrorBody,
  ) {
    super(body.message);
    this.name = "ApiError";
  }

  get kind(): "parse" | "math" | "http" {
    if (this.status === 400) {
      return "parse";
    }
    if (this.status === 422) {
      return "math";
    }
    return "http";
  }
}

function query(params: Record<string, string | number | undefined>): string {
  const search = new URLSearchParams();
  for (const [key, value] of Object.entries(params)) {
    if (value !== undefined) {
      search.set(key, String(value));
    }
  }
  return search.toString();
}

export function sceneUrl(base: string, q: SceneQuery): string {
  return `${base}/api/scene?${query({
    f: q.f,
    g: q.g,
    delta: q.delta,
    range: `${q.range[0]}:${q.range[1]}`,
    arrows: q.arrows,
    samples: q.samples,
  })}`;
}

export function probeUrl(base: string, f: string, x0: number, delta: number): string {
  return `${base}/api/probe?${query({ f, x0, delta })}`;
}

export function implicitUrl(base: string, f: string): string {
  return `${base}/api/implicit?${query({ f })}`;
}

export function transformUrl(base: string, g: string, kind: TransformKind, c: number): string {
  return `${base}/api/transform?${query({ g, kind, c })}`;
}

export function composeUrl(
  base: string,
  a: number,
  b: number,
  c: number,
  d: number,
  delta: number,
): string {
  return `${base}/api/compose?${query({ a, b, c, d, delta })}`;
}

/** The surface of the server the explorer consumes. */
export interface Api {
  scene(q: SceneQuery): Promise<Scene>;
  probe(f: string, x0: number, delta: number): Promise<ProbeResponse>;
  implicit(f: string): Promise<ImplicitResponse>;
  transform(g: string, kind: TransformKind, c: number): Promise<ImplicitResponse>;
  compose(a: number, b: number, c: number, d: number, delta: number): Promise<ComposeResponse>;
}

export class HttpApi implements Api {
  constructor(private readonly base: string = "") {}

  private async get<T>(url: string): Promise<T> {
    const res = await fetch(url);
    const text = await res.text();
    if (!res.ok) {
      let body: ApiErrorBody;
      try {
        body = JSON.parse(text) as ApiErrorBody;
      } catch {
        body = { error: "http_error", message: text || res.statusText };
      }
      throw new ApiError(res.status, body);
    }
    return JSON.parse(text) as T;
  }

  scene(q: SceneQuery): Promise<Scene> {
    return this.get(sceneUrl(this.base, q));
  }

  probe(f: string, x0: number, delta: number): Promise<ProbeResponse> {
    return this.get(probeUrl(this.base, f, x0, delta));
  }

  implicit(f: string): Promise<ImplicitResponse> {
    return this.get(implicitUrl(this.base, f));
  }

  transform(g: string, kind: TransformKind, c: number): Promise<ImplicitResponse> {
    return this.get(transformUrl(this.base, g, kind, c));
  }

  compose(a: number, b: number, c: number, d: number, delta: number): Promise<ComposeResponse> {
    return this.get(composeUrl(this.base, a, b, c, d, delta));
  }
}
