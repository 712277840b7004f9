import { describe, expect, it } from "vitest";

import { captionResidual, evaluateTerms, parseEquation } from "../src/equation.js";

describe("parseEquation", () => {
  it("reads the hyperbola caption term by term", () => {
    const terms = parseEquation("x^2 + 4*x*y - 2*x + 1 = 0");
    expect(terms).toEqual([
      { coef: 1, dx: 2, dy: 0 },
      { coef: 4, dx: 1, dy: 1 },
      { coef: -2, dx: 1, dy: 0 },
      { coef: 1, dx: 0, dy: 0 },
    ]);
  });

  it("accepts a leading negative term", () => {
    const terms = parseEquation("-x + y = 0");
    expect(terms).toEqual([
      { coef: -1, dx: 1, dy: 0 },
      { coef: 1, dx: 0, dy: 1 },
    ]);
    expect(evaluateTerms(terms, 2, 5)).toBe(3);
  });

  it("accepts rational coefficients", () => {
    const terms = parseEquation("1/2*x^2 - 3/4 = 0");
    expect(terms).toEqual([
      { coef: 0.5, dx: 2, dy: 0 },
      { coef: -0.75, dx: 0, dy: 0 },
    ]);
    expect(evaluateTerms(terms, 2, 7)).toBeCloseTo(1.25, 12);
  });

  it("works without the = 0 suffix", () => {
    expect(parseEquation("y^2 - 4*x")).toHaveLength(2);
  });

  it("rejects captions off the server grammar", () => {
    expect(() => parseEquation("x^2 = 5")).toThrow(/right-hand side/);
    expect(() => parseEquation("x**2 = 0")).toThrow(/unrecognized factor/);
    expect(() => parseEquation("x^2 + = 0")).toThrow(/malformed/);
    expect(() => parseEquation("2*x + foo = 0")).toThrow(/unrecognized factor/);
    expect(() => parseEquation("x^2 y = 0")).toThrow(/malformed equation/);
    expect(() => parseEquation("x*2 = 0")).toThrow(/unrecognized factor/);
    expect(() => parseEquation(" = 0")).toThrow(/empty equation/);
  });
});

describe("captionResidual", () => {
  it("vanishes at points on the curve", () => {
    // (1/3, -1/3) lies on the focal curve of x^2
    expect(captionResidual("x^2 + 4*x*y - 2*x + 1 = 0", 1 / 3, -1 / 3)).toBeLessThan(1e-12);
    // (0.5, 0.5) lies on the focal curve of 1/(4x)
    expect(captionResidual("x^2 + y^2 - x = 0", 0.5, 0.5)).toBe(0);
    // (1, 2) lies on the focal curve of x + 1/x
    expect(captionResidual("y^2 - 4*x = 0", 1, 2)).toBe(0);
  });

  it("is large off the curve", () => {
    expect(captionResidual("x^2 + 4*x*y - 2*x + 1 = 0", 1, 1)).toBe(4);
  });
});
