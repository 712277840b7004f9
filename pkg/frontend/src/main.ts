/**
 * Browser entry point: binds the controls in index.html to an
 * ExplorerStore and redraws from state snapshots. This is the only
 * module that touches the DOM.
 */

import { HttpApi } from "./api.js";
import { sceneToSvg } from "./render.js";
import type { ExplorerState } from "./state.js";
import { ExplorerStore } from "./state.js";
import { throttle } from "./throttle.js";
import { TRANSFORM_KINDS, type TransformKind } from "./types.js";

const CANVAS = { width: 860, height: 560 };
// 34 ms between probe requests keeps the drag under 30 calls per second
const PROBE_INTERVAL_MS = 34;

function byId<T extends HTMLElement>(id: string): T {
  const el = document.getElementById(id);
  if (el === null) {
    throw new Error(`missing element #${id}`);
  }
  return el as T;
}

function fmtNum(v: number): string {
  return Number.isInteger(v) ? String(v) : v.toPrecision(6).replace(/\.?0+$/, "");
}

function probeText(state: ExplorerState): string {
  const p = state.probe;
  if (p === null) {
    return "drag along the input axis to place the probe";
  }
  const at = `x0 = ${fmtNum(p.x0)}`;
  if (p.note !== null) {
    return `${at}: ${p.note}`;
  }
  if (p.focus !== null) {
    const [x, y] = p.focus;
    return `${at}: f'(x0) = ${fmtNum(p.fprime ?? NaN)}, focus (${fmtNum(x)}, ${fmtNum(y)})`;
  }
  if (p.direction !== null) {
    const [dirX, dirY] = p.direction;
    return `${at}: f'(x0) = ${fmtNum(p.fprime ?? NaN)}, focus at infinity toward (${fmtNum(dirX)} : ${fmtNum(dirY)})`;
  }
  return at;
}

function compositionText(state: ExplorerState): string {
  const c = state.composition;
  if (c === null) {
    return "";
  }
  const pt = (v: number[]): string =>
    v.length === 2 ? `(${fmtNum(v[0])}, ${fmtNum(v[1])})` : `(${v.map(fmtNum).join(" : ")})`;
  const t = c.t === null ? "undefined (focus at infinity)" : fmtNum(c.t);
  const badge = c.collinear ? "collinear" : "NOT collinear";
  return `F_f = ${pt(c.Ff)}   F_g = ${pt(c.Fg)}   F_gf = ${pt(c.Fgf)}   t = ${t}   [${badge}]`;
}

function main(): void {
  const store = new ExplorerStore(new HttpApi(""));

  const canvas = byId<HTMLDivElement>("canvas");
  const banner = byId<HTMLDivElement>("banner");
  const readout = byId<HTMLDivElement>("readout");
  const debugOverlay = byId<HTMLDivElement>("debug-overlay");
  const transformOut = byId<HTMLDivElement>("transform-out");
  const composeOut = byId<HTMLDivElement>("compose-out");

  const fnInput = byId<HTMLInputElement>("fn-input");
  const deltaInput = byId<HTMLInputElement>("delta-input");
  const deltaLabel = byId<HTMLSpanElement>("delta-label");
  const kindSelect = byId<HTMLSelectElement>("transform-kind");
  const cInput = byId<HTMLInputElement>("transform-c");
  const cLabel = byId<HTMLSpanElement>("transform-c-label");
  const composeToggle = byId<HTMLInputElement>("compose-toggle");

  for (const kind of TRANSFORM_KINDS) {
    const opt = document.createElement("option");
    opt.value = kind;
    opt.textContent = kind;
    kindSelect.appendChild(opt);
  }
  kindSelect.value = store.getState().transformKind;

  const familyInputs: Record<string, HTMLInputElement> = {};
  for (const name of ["a", "b", "c", "d", "e"] as const) {
    familyInputs[name] = byId<HTMLInputElement>(`family-${name}`);
  }
  const composeInputs: Record<string, HTMLInputElement> = {};
  for (const name of ["a", "b", "c", "d"] as const) {
    composeInputs[name] = byId<HTMLInputElement>(`compose-${name}`);
  }

  const render = (state: ExplorerState): void => {
    if (state.scene !== null) {
      canvas.innerHTML = sceneToSvg(state.scene, state.probe, CANVAS);
    }
    banner.textContent = state.banner ?? "";
    banner.style.display = state.banner === null ? "none" : "block";
    readout.textContent = probeText(state);
    const r = state.probe?.residual ?? null;
    debugOverlay.textContent = r === null ? "" : `residual |G(focus)| = ${r.toExponential(3)}`;
    transformOut.textContent =
      state.transformed === null
        ? ""
        : `${state.transformKind} (c = ${fmtNum(state.transformC)}):  ${state.transformed.equation}` +
          (state.transformed.class === null ? "" : `  [${state.transformed.class}]`);
    composeOut.textContent = compositionText(state);
    deltaLabel.textContent = fmtNum(state.delta);
    cLabel.textContent = fmtNum(state.transformC);
  };
  store.subscribe(render);
  render(store.getState());

  fnInput.value = store.getState().functionText;
  fnInput.addEventListener("change", () => {
    void store.setFunction(fnInput.value);
  });

  deltaInput.addEventListener("input", () => {
    void store.setDelta(Number(deltaInput.value));
  });

  const applyTransform = (): void => {
    void store.applyTransform(kindSelect.value as TransformKind, Number(cInput.value));
  };
  kindSelect.addEventListener("change", applyTransform);
  cInput.addEventListener("input", applyTransform);

  const applyFamily = (): void => {
    void store.setFamily({
      a: Number(familyInputs.a.value),
      b: Number(familyInputs.b.value),
      c: Number(familyInputs.c.value),
      d: Number(familyInputs.d.value),
      e: Number(familyInputs.e.value),
    });
  };
  for (const input of Object.values(familyInputs)) {
    input.addEventListener("input", applyFamily);
  }

  const applyComposeParams = (): void => {
    void store.setComposeParams({
      a: Number(composeInputs.a.value),
      b: Number(composeInputs.b.value),
      c: Number(composeInputs.c.value),
      d: Number(composeInputs.d.value),
    });
  };
  composeToggle.addEventListener("change", () => {
    void store.setCompose(composeToggle.checked);
  });
  for (const input of Object.values(composeInputs)) {
    input.addEventListener("input", applyComposeParams);
  }

  // probe drag: pointer y on the canvas maps to an input value on the
  // left axis; requests are throttled with a trailing flush so the
  // readout settles on the release position
  const dragTo = throttle((x0: number) => {
    void store.dragProbe(x0);
  }, PROBE_INTERVAL_MS);
  const pointerToInput = (ev: PointerEvent): number | null => {
    const scene = store.getState().scene;
    if (scene === null) {
      return null;
    }
    const rect = canvas.getBoundingClientRect();
    if (rect.height === 0) {
      return null;
    }
    const frac = (ev.clientY - rect.top) / rect.height;
    const vp = scene.viewport;
    return vp.ymax - frac * (vp.ymax - vp.ymin);
  };
  let dragging = false;
  canvas.addEventListener("pointerdown", (ev) => {
    dragging = true;
    canvas.setPointerCapture(ev.pointerId);
    const x0 = pointerToInput(ev);
    if (x0 !== null) {
      dragTo(x0);
    }
  });
  canvas.addEventListener("pointermove", (ev) => {
    if (!dragging) {
      return;
    }
    const x0 = pointerToInput(ev);
    if (x0 !== null) {
      dragTo(x0);
    }
  });
  canvas.addEventListener("pointerup", () => {
    dragging = false;
  });

  void store.refreshScene();
}

main();
