/**
 * Shapes of the JSON payloads served by the focalcurves HTTP API.
 *
 * These mirror the server exactly; the explorer performs no mathematics
 * of its own beyond the residual readout in equation.ts.
 */

export interface Viewport {
  xmin: number;
  xmax: number;
  ymin: number;
  ymax: number;
}

export type Point = [number, number];

export interface Arrow {
  from: Point;
  to: Point;
}

/** Probe block embedded in a scene (when the scene was built with one). */
export interface SceneProbe {
  x0: number;
  focus: Point | null;
  fprime: number;
}

export interface Scene {
  delta: number;
  /** x positions of the vertical axes: two for f alone, three for g∘f. */
  axes: number[];
  arrows: Arrow[];
  focal_branches: Point[][];
  cusps: Point[];
  /** Foci of linear stages; empty for nonlinear functions. */
  foci: Point[];
  probe: SceneProbe | null;
  /** Implicit-equation caption, present only for rational functions. */
  implicit: string | null;
  viewport: Viewport;
}

export interface ProbeResponse {
  /** Affine focus, or null when the focus is at infinity. */
  focus: Point | null;
  /** Projective coordinates, meaningful even at infinity. */
  projective: [number, number, number];
  fprime: number;
}

export interface PolyTerm {
  dx: number;
  dy: number;
  num: number;
  den: number;
}

export interface ImplicitResponse {
  equation: string;
  degree: number;
  class: string | null;
  poly2: { terms: PolyTerm[] };
}

export interface ComposeResponse {
  /** [x, y] affine, or [X, Y, Z] projective when at infinity. */
  Ff: number[];
  Fg: number[];
  Fgf: number[];
  /** Interpolation ratio; null when the composite focus is at infinity. */
  t: number | null;
  collinear: boolean;
}

export type TransformKind =
  | "add-constant"
  | "scale-output"
  | "shift-input"
  | "scale-input";

export const TRANSFORM_KINDS: readonly TransformKind[] = [
  "add-constant",
  "scale-output",
  "shift-input",
  "scale-input",
];

export interface ApiErrorBody {
  error: string;
  message: string;
}
