import { describe, expect, it } from "vitest";

import { ARROW_COLOR, FOCAL_COLOR, probeArrow, project, sceneToSvg } from "../src/render.js";
import type { ProbeReadout } from "../src/state.js";
import type { Scene } from "../src/types.js";

const SIZE = { width: 400, height: 400 };

function sampleScene(): Scene {
  return {
    delta: 1,
    axes: [0, 1],
    arrows: [
      { from: [0, -1], to: [1, 1] },
      { from: [0, 0], to: [1, 0] },
    ],
    focal_branches: [
      [
        [0.2, 0.1],
        [0.3, 0.2],
        [0.4, 0.4],
      ],
    ],
    cusps: [[0.5, 1.5]],
    foci: [],
    probe: null,
    implicit: "x^2 + 4*x*y - 2*x + 1 = 0",
    viewport: { xmin: -2, xmax: 2, ymin: -2, ymax: 2 },
  };
}

function readout(partial: Partial<ProbeReadout>): ProbeReadout {
  return {
    x0: 0,
    focus: null,
    direction: null,
    fprime: null,
    residual: null,
    note: null,
    ...partial,
  };
}

describe("project", () => {
  it("maps viewport corners to canvas corners with y flipped", () => {
    const toPx = project({ xmin: -2, xmax: 2, ymin: -2, ymax: 2 }, SIZE);
    expect(toPx([-2, 2])).toEqual([0, 0]);
    expect(toPx([2, -2])).toEqual([400, 400]);
    expect(toPx([0, 0])).toEqual([200, 200]);
  });
});

describe("probeArrow", () => {
  it("recovers the output value from an affine focus", () => {
    // f = x^2 at x0 = -1: focus (1/3, -1/3), so the arrow ends at f(-1) = 1
    const seg = probeArrow(1, readout({ x0: -1, focus: [1 / 3, -1 / 3] }));
    expect(seg).not.toBeNull();
    expect(seg![0]).toEqual([0, -1]);
    expect(seg![1][0]).toBe(1);
    expect(seg![1][1]).toBeCloseTo(1, 12);
  });

  it("follows the direction of a focus at infinity", () => {
    // f = x + 5: focus (1 : 5 : 0), so the arrow from x0 = 2 ends at 7
    const seg = probeArrow(1, readout({ x0: 2, direction: [1, 5, 0] }));
    expect(seg![1]).toEqual([1, 7]);
  });

  it("gives up when the geometry degenerates", () => {
    expect(probeArrow(1, readout({ x0: 0, focus: [0, 1] }))).toBeNull();
    expect(probeArrow(1, readout({ x0: 0 }))).toBeNull();
  });
});

describe("sceneToSvg", () => {
  it("draws axes, arrows, branches, cusps and the caption", () => {
    const svg = sceneToSvg(sampleScene(), null, SIZE);
    expect(svg.startsWith("<svg ")).toBe(true);
    expect(svg.endsWith("</svg>")).toBe(true);
    const arrowLines = svg.split(`stroke="${ARROW_COLOR}"`).length - 1;
    expect(arrowLines).toBe(2);
    expect(svg.split("<polygon").length - 1).toBe(2); // one head per arrow
    expect(svg.split(`stroke="${FOCAL_COLOR}"`).length - 1).toBe(1);
    expect(svg).toContain("x^2 + 4*x*y - 2*x + 1 = 0");
    expect(svg.split("<circle").length - 1).toBe(1); // the cusp marker
  });

  it("is byte-deterministic", () => {
    const a = sceneToSvg(sampleScene(), readout({ x0: -1, focus: [1 / 3, -1 / 3] }), SIZE);
    const b = sceneToSvg(sampleScene(), readout({ x0: -1, focus: [1 / 3, -1 / 3] }), SIZE);
    expect(a).toBe(b);
  });

  it("marks an affine probe focus with a solid arrow and a dot", () => {
    const svg = sceneToSvg(sampleScene(), readout({ x0: -1, focus: [1 / 3, -1 / 3] }), SIZE);
    expect(svg).toContain('stroke="#e8861a"');
    expect(svg).not.toContain("stroke-dasharray");
    expect(svg.split("<circle").length - 1).toBe(2); // cusp + focus marker
  });

  it("dashes the probe arrow when the focus is at infinity", () => {
    const svg = sceneToSvg(sampleScene(), readout({ x0: 0, direction: [1, 1, 0] }), SIZE);
    expect(svg).toContain("stroke-dasharray");
  });

  it("escapes markup in the caption", () => {
    const scene = { ...sampleScene(), implicit: "x < y & y > 0" };
    const svg = sceneToSvg(scene, null, SIZE);
    expect(svg).toContain("x &lt; y &amp; y &gt; 0");
  });

  it("omits the caption line when there is none", () => {
    const scene = { ...sampleScene(), implicit: null };
    expect(sceneToSvg(scene, null, SIZE)).not.toContain("<text");
  });
});
