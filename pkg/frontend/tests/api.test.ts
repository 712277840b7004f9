import { describe, expect, it } from "vitest";

import {
  ApiError,
  composeUrl,
  implicitUrl,
  probeUrl,
  sceneUrl,
  transformUrl,
} from "../src/api.js";

describe("url builders", () => {
  it("builds the scene query in a fixed order", () => {
    const url = sceneUrl("", {
      f: "x^2",
      delta: 1,
      range: [-2, 2],
      arrows: 21,
      samples: 401,
    });
    expect(url).toBe("/api/scene?f=x%5E2&delta=1&range=-2%3A2&arrows=21&samples=401");
  });

  it("includes g only for compositions", () => {
    const url = sceneUrl("http://localhost:8642", {
      f: "2*x - 2",
      g: "2*x + 3",
      delta: 1,
      range: [-2, 2],
      arrows: 11,
      samples: 101,
    });
    expect(url.startsWith("http://localhost:8642/api/scene?")).toBe(true);
    expect(url).toContain("f=2*x+-+2");
    expect(url).toContain("&g=2*x+%2B+3");
  });

  it("builds probe, implicit, transform and compose urls", () => {
    expect(probeUrl("", "x^2", -1, 1)).toBe("/api/probe?f=x%5E2&x0=-1&delta=1");
    expect(implicitUrl("", "1/(4x)")).toBe("/api/implicit?f=1%2F%284x%29");
    expect(transformUrl("", "x^2", "shift-input", 1)).toBe(
      "/api/transform?g=x%5E2&kind=shift-input&c=1",
    );
    expect(composeUrl("", 2, -2, 2, 3, 1)).toBe("/api/compose?a=2&b=-2&c=2&d=3&delta=1");
  });
});

describe("ApiError", () => {
  it("classifies statuses into parse, math and http kinds", () => {
    expect(new ApiError(400, { error: "parse_error", message: "m" }).kind).toBe("parse");
    expect(new ApiError(422, { error: "math_error", message: "m" }).kind).toBe("math");
    expect(new ApiError(500, { error: "oops", message: "m" }).kind).toBe("http");
  });

  it("uses the server message as its own", () => {
    const err = new ApiError(400, { error: "parse_error", message: 'unexpected "^"' });
    expect(err.message).toBe('unexpected "^"');
  });
});
