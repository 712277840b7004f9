/**
 * Explorer state and the controller that keeps it consistent with the
 * server.
 *
 * Concurrency rules: every request family (scene, probe, transform,
 * composition) carries a sequence number, and a response is applied
 * only when it is the newest request issued on its channel. A scene
 * refresh also invalidates in-flight probes, since those belong to the
 * function being replaced; probes never invalidate a scene. Failed
 * requests surface in the banner and leave the last good view intact.
 */

import type { Api, SceneQuery } from "./api.js";
import { ApiError } from "./api.js";
import { captionResidual } from "./equation.js";
import type {
  ComposeResponse,
  ImplicitResponse,
  Point,
  Scene,
  TransformKind,
} from "./types.js";

export interface ProbeReadout {
  x0: number;
  focus: Point | null;
  /** Projective direction of a focus at infinity, else null. */
  direction: [number, number, number] | null;
  fprime: number | null;
  /** |G(focus)| against the implicit caption, when both exist. */
  residual: number | null;
  /** Short annotation such as "undefined here" at domain errors. */
  note: string | null;
}

export interface FamilyParams {
  a: number;
  b: number;
  c: number;
  d: number;
  e: number;
}

export interface ComposeParams {
  a: number;
  b: number;
  c: number;
  d: number;
}

export interface ExplorerState {
  functionText: string;
  delta: number;
  range: [number, number];
  arrowCount: number;
  sampleCount: number;
  probeX: number | null;
  transformKind: TransformKind;
  transformC: number;
  family: FamilyParams;
  familyOn: boolean;
  composeOn: boolean;
  composeParams: ComposeParams;
  /** Last successfully rendered scene; never cleared by failures. */
  scene: Scene | null;
  implicit: ImplicitResponse | null;
  transformed: ImplicitResponse | null;
  composition: ComposeResponse | null;
  probe: ProbeReadout | null;
  banner: string | null;
}

export function initialState(): ExplorerState {
  return {
    functionText: "x^2",
    delta: 1,
    range: [-2, 2],
    arrowCount: 21,
    sampleCount: 401,
    probeX: null,
    transformKind: "shift-input",
    transformC: 1,
    family: { a: 1, b: 2, c: 2, d: 1, e: 1 },
    familyOn: false,
    composeOn: false,
    composeParams: { a: 2, b: -2, c: 2, d: 3 },
    scene: null,
    implicit: null,
    transformed: null,
    composition: null,
    probe: null,
    banner: null,
  };
}

/** "a*x + b" with the sign of b folded into the operator. */
export function linearText(a: number, b: number): string {
  const tail = b < 0 ? `- ${-b}` : `+ ${b}`;
  return `${a}*x ${tail}`;
}

/** "(a*x^2 + b*x + c)/(d*x + e)" for the conic-family sliders. */
export function familyText(p: FamilyParams): string {
  const join = (v: number, suffix: string): string =>
    `${v < 0 ? "-" : "+"} ${Math.abs(v)}${suffix}`;
  const num = `${p.a}*x^2 ${join(p.b, "*x")} ${join(p.c, "")}`;
  const den = `${p.d}*x ${join(p.e, "")}`;
  return `(${num})/(${den})`;
}

function describeError(err: unknown): string {
  if (err instanceof ApiError) {
    return err.kind === "parse" ? `parse error: ${err.message}` : err.message;
  }
  return err instanceof Error ? err.message : String(err);
}

type Listener = (state: ExplorerState) => void;

export class ExplorerStore {
  private state: ExplorerState;
  private listeners: Listener[] = [];
  private sceneSeq = 0;
  private probeSeq = 0;
  private transformSeq = 0;
  private composeSeq = 0;

  constructor(
    private readonly api: Api,
    initial: ExplorerState = initialState(),
  ) {
    this.state = initial;
  }

  getState(): ExplorerState {
    return this.state;
  }

  subscribe(fn: Listener): () => void {
    this.listeners.push(fn);
    return () => {
      this.listeners = this.listeners.filter((l) => l !== fn);
    };
  }

  private commit(patch: Partial<ExplorerState>): void {
    this.state = { ...this.state, ...patch };
    for (const fn of this.listeners) {
      fn(this.state);
    }
  }

  /** The f (and for compositions g) texts the next scene will use. */
  private sceneTexts(): { f: string; g?: string } {
    const st = this.state;
    if (st.composeOn) {
      const p = st.composeParams;
      return { f: linearText(p.a, p.b), g: linearText(p.c, p.d) };
    }
    if (st.familyOn) {
      return { f: familyText(st.family) };
    }
    return { f: st.functionText };
  }

  async refreshScene(): Promise<void> {
    const texts = this.sceneTexts();
    if (texts.f.trim() === "") {
      return;
    }
    const seq = ++this.sceneSeq;
    this.probeSeq += 1; // probes in flight describe the scene being replaced
    const st = this.state;
    const q: SceneQuery = {
      f: texts.f,
      g: texts.g,
      delta: st.delta,
      range: st.range,
      arrows: st.arrowCount,
      samples: st.sampleCount,
    };
    try {
      const scene = await this.api.scene(q);
      if (seq !== this.sceneSeq) {
        return;
      }
      let implicit: ImplicitResponse | null = null;
      if (scene.implicit !== null && texts.g === undefined) {
        try {
          implicit = await this.api.implicit(texts.f);
        } catch {
          implicit = null; // caption still shown from the scene itself
        }
        if (seq !== this.sceneSeq) {
          return;
        }
      }
      this.commit({ scene, implicit, probe: null, banner: null });
    } catch (err) {
      if (seq !== this.sceneSeq) {
        return;
      }
      this.commit({ banner: describeError(err) });
    }
  }

  async dragProbe(x0: number): Promise<void> {
    const st = this.state;
    if (st.scene === null) {
      return;
    }
    const seq = ++this.probeSeq;
    this.commit({ probeX: x0 });
    const texts = this.sceneTexts();
    try {
      const res = await this.api.probe(texts.f, x0, st.delta);
      if (seq !== this.probeSeq) {
        return;
      }
      const caption = this.state.scene?.implicit ?? null;
      const residual =
        res.focus !== null && caption !== null
          ? captionResidual(caption, res.focus[0], res.focus[1])
          : null;
      this.commit({
        probe: {
          x0,
          focus: res.focus,
          direction: res.focus === null ? res.projective : null,
          fprime: res.fprime,
          residual,
          note: null,
        },
        banner: null,
      });
    } catch (err) {
      if (seq !== this.probeSeq) {
        return;
      }
      if (err instanceof ApiError && err.kind === "math") {
        this.commit({
          probe: { x0, focus: null, direction: null, fprime: null, residual: null, note: "undefined here" },
        });
        return;
      }
      this.commit({ banner: describeError(err) });
    }
  }

  async applyTransform(kind: TransformKind, c: number): Promise<void> {
    const seq = ++this.transformSeq;
    this.commit({ transformKind: kind, transformC: c });
    const texts = this.sceneTexts();
    try {
      const transformed = await this.api.transform(texts.f, kind, c);
      if (seq !== this.transformSeq) {
        return;
      }
      this.commit({ transformed, banner: null });
    } catch (err) {
      if (seq !== this.transformSeq) {
        return;
      }
      this.commit({ transformed: null, banner: describeError(err) });
    }
  }

  async refreshComposition(): Promise<void> {
    const p = this.state.composeParams;
    const seq = ++this.composeSeq;
    try {
      const composition = await this.api.compose(p.a, p.b, p.c, p.d, this.state.delta);
      if (seq !== this.composeSeq) {
        return;
      }
      this.commit({ composition, banner: null });
    } catch (err) {
      if (seq !== this.composeSeq) {
        return;
      }
      this.commit({ composition: null, banner: describeError(err) });
    }
  }

  setFunction(text: string): Promise<void> {
    this.commit({ functionText: text, familyOn: false, composeOn: false });
    return this.refreshScene();
  }

  setDelta(delta: number): Promise<void> {
    this.commit({ delta });
    const work = [this.refreshScene()];
    if (this.state.composeOn) {
      work.push(this.refreshComposition());
    }
    return Promise.all(work).then(() => undefined);
  }

  setRange(lo: number, hi: number): Promise<void> {
    this.commit({ range: [lo, hi] });
    return this.refreshScene();
  }

  setFamily(params: FamilyParams): Promise<void> {
    this.commit({ family: params, familyOn: true, composeOn: false });
    return this.refreshScene();
  }

  setCompose(on: boolean): Promise<void> {
    this.commit({ composeOn: on, composition: null });
    const work = [this.refreshScene()];
    if (on) {
      work.push(this.refreshComposition());
    }
    return Promise.all(work).then(() => undefined);
  }

  setComposeParams(params: ComposeParams): Promise<void> {
    this.commit({ composeParams: params });
    if (!this.state.composeOn) {
      return Promise.resolve();
    }
    return Promise.all([this.refreshScene(), this.refreshComposition()]).then(() => undefined);
  }
}
