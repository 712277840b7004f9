/**
 * Scene JSON to SVG markup. Pure string building: the DOM layer just
 * assigns the result to innerHTML, so everything here is testable and
 * deterministic (fixed number formatting, stable element order).
 */

import type { ProbeReadout } from "./state.js";
import type { Point, Scene, Viewport } from "./types.js";

export interface CanvasSize {
  width: number;
  height: number;
}

export const ARROW_COLOR = "#1f6fb2";
export const FOCAL_COLOR = "#c23b22";
export const PROBE_COLOR = "#e8861a";
export const CUSP_COLOR = "#7a1f77";

function fmt(v: number): string {
  const s = v.toFixed(2);
  return s === "-0.00" ? "0.00" : s;
}

/** World-to-pixel mapper for a viewport on a canvas (y grows upward). */
export function project(vp: Viewport, size: CanvasSize): (p: Point) => Point {
  const sx = size.width / (vp.xmax - vp.xmin);
  const sy = size.height / (vp.ymax - vp.ymin);
  return ([x, y]: Point): Point => [(x - vp.xmin) * sx, (vp.ymax - y) * sy];
}

/**
 * Endpoints of the arrow through input x0, recovered from the local
 * focus: the focus always lies on that arrow's line, so the output
 * value is read off where the line meets the output axis.
 */
export function probeArrow(delta: number, readout: ProbeReadout): [Point, Point] | null {
  const x0 = readout.x0;
  if (readout.focus !== null) {
    const [fx, fy] = readout.focus;
    if (fx === 0) {
      return null;
    }
    return [
      [0, x0],
      [delta, x0 + ((fy - x0) * delta) / fx],
    ];
  }
  if (readout.direction !== null) {
    const [dirX, dirY] = readout.direction;
    if (dirX === 0) {
      return null;
    }
    return [
      [0, x0],
      [delta, x0 + (dirY / dirX) * delta],
    ];
  }
  return null;
}

function line(a: Point, b: Point, stroke: string, width: number, extra = ""): string {
  return (
    `<line x1="${fmt(a[0])}" y1="${fmt(a[1])}" x2="${fmt(b[0])}" y2="${fmt(b[1])}" ` +
    `stroke="${stroke}" stroke-width="${width}"${extra}/>`
  );
}

function arrowHead(a: Point, b: Point, color: string): string {
  const dx = b[0] - a[0];
  const dy = b[1] - a[1];
  const len = Math.hypot(dx, dy);
  if (len === 0) {
    return "";
  }
  const ux = dx / len;
  const uy = dy / len;
  const size = 6;
  const left: Point = [b[0] - size * ux + size * 0.5 * uy, b[1] - size * uy - size * 0.5 * ux];
  const right: Point = [b[0] - size * ux - size * 0.5 * uy, b[1] - size * uy + size * 0.5 * ux];
  return (
    `<polygon points="${fmt(b[0])},${fmt(b[1])} ${fmt(left[0])},${fmt(left[1])} ` +
    `${fmt(right[0])},${fmt(right[1])}" fill="${color}"/>`
  );
}

function polyline(points: Point[], stroke: string, width: number, extra = ""): string {
  const coords = points.map(([x, y]) => `${fmt(x)},${fmt(y)}`).join(" ");
  return `<polyline points="${coords}" fill="none" stroke="${stroke}" stroke-width="${width}"${extra}/>`;
}

function escapeText(s: string): string {
  return s.replace(/&/g, "&amp;").replace(/</g, "&lt;").replace(/>/g, "&gt;");
}

export function sceneToSvg(scene: Scene, probe: ProbeReadout | null, size: CanvasSize): string {
  const toPx = project(scene.viewport, size);
  const parts: string[] = [];
  parts.push(
    `<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 ${size.width} ${size.height}" ` +
      `width="${size.width}" height="${size.height}">`,
  );
  parts.push(`<rect width="${size.width}" height="${size.height}" fill="#ffffff"/>`);

  for (const ax of scene.axes) {
    parts.push(line(toPx([ax, scene.viewport.ymin]), toPx([ax, scene.viewport.ymax]), "#444444", 1));
  }
  for (const arrow of scene.arrows) {
    const a = toPx(arrow.from);
    const b = toPx(arrow.to);
    parts.push(line(a, b, ARROW_COLOR, 1));
    parts.push(arrowHead(a, b, ARROW_COLOR));
  }
  for (const branch of scene.focal_branches) {
    if (branch.length >= 2) {
      parts.push(polyline(branch.map(toPx), FOCAL_COLOR, 1.5));
    }
  }
  for (const cusp of scene.cusps) {
    const [cx, cy] = toPx(cusp);
    parts.push(`<circle cx="${fmt(cx)}" cy="${fmt(cy)}" r="4" fill="none" stroke="${CUSP_COLOR}" stroke-width="1.5"/>`);
  }
  for (const focus of scene.foci) {
    const [cx, cy] = toPx(focus);
    parts.push(`<circle cx="${fmt(cx)}" cy="${fmt(cy)}" r="3" fill="${FOCAL_COLOR}"/>`);
  }

  if (probe !== null) {
    const seg = probeArrow(scene.delta, probe);
    if (seg !== null) {
      const a = toPx(seg[0]);
      const b = toPx(seg[1]);
      const dashed = probe.focus === null ? ' stroke-dasharray="6 3"' : "";
      parts.push(line(a, b, PROBE_COLOR, 2.5, dashed));
      parts.push(arrowHead(a, b, PROBE_COLOR));
    }
    if (probe.focus !== null) {
      const [cx, cy] = toPx(probe.focus);
      parts.push(`<circle cx="${fmt(cx)}" cy="${fmt(cy)}" r="4" fill="${PROBE_COLOR}"/>`);
    }
  }

  if (scene.implicit !== null) {
    parts.push(
      `<text x="8" y="${size.height - 8}" font-family="monospace" font-size="12" fill="#222222">` +
        `${escapeText(scene.implicit)}</text>`,
    );
  }
  parts.push("</svg>");
  return parts.join("");
}
