"""Renderable scenes: arrow graph, focal branches, cusps, foci, probe.

A Scene is a pure value assembled from the sampling and algebra modules,
serialized either to canonical JSON (lossless, full doubles) or to a
standalone SVG document (deterministic, 6 significant digits).
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Tuple

from . import algebra
from .algebra import Poly2, substitute_rational
from .expr import DomainError, ExprNode, evaluate, substitute
from .expr import to_rational_function, RationalFunction
from .focal import (
    AxesConfig,
    detect_cusps,
    linear_focus,
    linear_params_of,
    probe as probe_at,
    sample_focal_curve,
)
from .transforms import compose_linear_foci


@dataclass(frozen=True)
class Viewport:
    xmin: float
    xmax: float
    ymin: float
    ymax: float

    def __post_init__(self):
        if not (self.xmin < self.xmax and self.ymin < self.ymax):
            raise ValueError("viewport ranges must be nonempty")

    def contains(self, x: float, y: float) -> bool:
        return self.xmin <= x <= self.xmax and self.ymin <= y <= self.ymax

    def to_dict(self) -> dict:
        return {"xmin": self.xmin, "xmax": self.xmax, "ymin": self.ymin, "ymax": self.ymax}


@dataclass(frozen=True)
class ProbeInfo:
    x0: float
    focus: Optional[Tuple[float, float]]
    fprime: float


@dataclass(frozen=True)
class RenderConfig:
    arrow_count: int = 21
    arrow_range: Tuple[float, float] = (-2.0, 2.0)
    focal_sample_count: int = 401
    focal_range: Tuple[float, float] = (-2.0, 2.0)
    delta: float = 1.0
    viewport: Optional[Viewport] = None
    show_arrows: bool = True
    show_extended: bool = True
    show_focal: bool = True
    show_cusps: bool = True
    probe_x0: Optional[float] = None

    def __post_init__(self):
        if self.arrow_count < 2 or self.focal_sample_count < 2:
            raise ValueError("counts must be at least 2")
        if not (self.arrow_range[0] < self.arrow_range[1]):
            raise ValueError("arrow range must be nonempty")
        if not (self.focal_range[0] < self.focal_range[1]):
            raise ValueError("focal range must be nonempty")
        if not (self.delta > 0):
            raise ValueError("delta must be positive")


@dataclass(frozen=True)
class Scene:
    delta: float
    axes: Tuple[float, ...]
    arrows: Tuple[Tuple[Tuple[float, float], Tuple[float, float]], ...]
    focal_branches: Tuple[Tuple[Tuple[float, float], ...], ...]
    cusps: Tuple[Tuple[float, float], ...]
    foci: Tuple[Tuple[float, float], ...]
    probe: Optional[ProbeInfo]
    implicit: Optional[str]
    viewport: Viewport


def _rescale_implicit_x(g: Poly2, delta: Fraction) -> Poly2:
    """Equation of the same curve with the x-axis unit changed from 1 to delta."""
    if delta == 1:
        return g
    u = Poly2.x().scale(Fraction(1, 1) / delta)
    return substitute_rational(g, u, Poly2.y(), Poly2.one()).normalized()


def implicit_equation_for(f: ExprNode, delta: float = 1.0) -> Optional[Poly2]:
    """Normalized implicit focal equation when f is rational and non-degenerate."""
    rf = to_rational_function(f)
    if not isinstance(rf, RationalFunction):
        return None
    try:
        g = algebra.implicitize(*algebra.focal_triple(rf))
    except algebra.DegenerateParametrization:
        return None
    d = Fraction(delta)
    if d != 1:
        g = _rescale_implicit_x(g, d)
    return g


def build_scene(f: ExprNode, cfg: RenderConfig = RenderConfig(), g: Optional[ExprNode] = None) -> Scene:
    """Assemble a scene for f, or for the composition g(f(x)) when g is given.

    Arrows run between the input axis x = 0 and the output axis x = delta;
    composition adds a second stage between delta and 2*delta, and the focal
    data describes the composite across the doubled width.  Focal branches
    split at domain gaps, at foci at infinity, and at viewport exits, so
    every emitted polyline point lies on the focal curve and inside the
    viewport.  EmptyRange propagates when no focal sample exists.
    """
    delta = cfg.delta
    composition = g is not None
    stages = 2 if composition else 1
    axes = tuple(delta * i for i in range(stages + 1))
    vp = cfg.viewport or _default_viewport(cfg, stages)

    arrows: List[Tuple[Tuple[float, float], Tuple[float, float]]] = []
    if cfg.show_arrows:
        lo, hi = cfg.arrow_range
        for i in range(cfg.arrow_count):
            x = lo + (hi - lo) * i / (cfg.arrow_count - 1)
            try:
                fx = evaluate(f, x)
            except DomainError:
                continue
            arrows.append(((0.0, x), (delta, fx)))
            if composition:
                try:
                    gfx = evaluate(g, fx)
                except DomainError:
                    continue
                arrows.append(((delta, fx), (2.0 * delta, gfx)))

    if composition:
        curve_fn = substitute(g, f)
        curve_cfg = AxesConfig(2.0 * delta)
    else:
        curve_fn = f
        curve_cfg = AxesConfig(delta)

    branches: List[Tuple[Tuple[float, float], ...]] = []
    if cfg.show_focal:
        samples = sample_focal_curve(
            curve_fn, cfg.focal_range[0], cfg.focal_range[1], cfg.focal_sample_count, curve_cfg
        )
        current: List[Tuple[float, float]] = []

        def flush():
            if len(current) >= 2:
                branches.append(tuple(current))
            current.clear()

        for s in samples:
            if s is None or s.at_infinity or s.affine is None:
                flush()
            elif vp.contains(s.affine.x, s.affine.y):
                current.append((s.affine.x, s.affine.y))
            else:
                flush()
        flush()

    cusps: List[Tuple[float, float]] = []
    if cfg.show_cusps:
        scale = curve_cfg.delta
        for _, pt in detect_cusps(curve_fn, cfg.focal_range[0], cfg.focal_range[1]):
            cusps.append((pt.x * scale, pt.y))

    foci: List[Tuple[float, float]] = []
    if composition:
        pf = linear_params_of(f)
        pg = linear_params_of(g)
        if pf is not None and pg is not None:
            res = compose_linear_foci(pf.a, pf.b, pg.a, pg.b, AxesConfig(delta))
            for p in (res.f_focus, res.g_focus, res.gf_focus):
                a = p.affine()
                if a is not None:
                    foci.append((a.x, a.y))
    else:
        pf = linear_params_of(f)
        if pf is not None:
            a = linear_focus(pf, AxesConfig(delta)).affine()
            if a is not None:
                foci.append((a.x, a.y))

    probe_info = None
    if cfg.probe_x0 is not None and not composition:
        pr = probe_at(f, cfg.probe_x0, AxesConfig(delta))
        focus = (pr.focus.x, pr.focus.y) if pr.focus is not None else None
        probe_info = ProbeInfo(pr.x0, focus, pr.fprime)

    implicit = None
    gpoly = implicit_equation_for(curve_fn, curve_cfg.delta)
    if gpoly is not None:
        implicit = gpoly.equation_str() + " = 0"

    return Scene(
        delta=delta,
        axes=axes,
        arrows=tuple(arrows),
        focal_branches=tuple(branches),
        cusps=tuple(cusps),
        foci=tuple(foci),
        probe=probe_info,
        implicit=implicit,
        viewport=vp,
    )


def _default_viewport(cfg: RenderConfig, stages: int) -> Viewport:
    lo, hi = cfg.arrow_range
    margin = 0.25 * (hi - lo)
    return Viewport(
        xmin=-2.0 * cfg.delta,
        xmax=(stages + 2.0) * cfg.delta,
        ymin=lo - margin,
        ymax=hi + margin,
    )


# ---------------------------------------------------------------------------
# JSON serialization


def scene_to_dict(s: Scene) -> dict:
    return {
        "delta": s.delta,
        "axes": list(s.axes),
        "arrows": [{"from": list(a), "to": list(b)} for a, b in s.arrows],
        "focal_branches": [[list(p) for p in branch] for branch in s.focal_branches],
        "cusps": [list(p) for p in s.cusps],
        "foci": [list(p) for p in s.foci],
        "probe": None
        if s.probe is None
        else {
            "x0": s.probe.x0,
            "focus": None if s.probe.focus is None else list(s.probe.focus),
            "fprime": s.probe.fprime,
        },
        "implicit": s.implicit,
        "viewport": s.viewport.to_dict(),
    }


def scene_from_dict(d: dict) -> Scene:
    probe = None
    if d.get("probe") is not None:
        p = d["probe"]
        probe = ProbeInfo(
            p["x0"],
            None if p.get("focus") is None else (p["focus"][0], p["focus"][1]),
            p["fprime"],
        )
    return Scene(
        delta=d["delta"],
        axes=tuple(d["axes"]),
        arrows=tuple(((a["from"][0], a["from"][1]), (a["to"][0], a["to"][1])) for a in d["arrows"]),
        focal_branches=tuple(tuple((p[0], p[1]) for p in br) for br in d["focal_branches"]),
        cusps=tuple((p[0], p[1]) for p in d["cusps"]),
        foci=tuple((p[0], p[1]) for p in d["foci"]),
        probe=probe,
        implicit=d.get("implicit"),
        viewport=Viewport(**d["viewport"]),
    )


def scene_to_json(s: Scene) -> str:
    """Canonical JSON: sorted keys, no whitespace, full double precision."""
    return json.dumps(scene_to_dict(s), sort_keys=True, separators=(",", ":"))


def scene_from_json(text: str) -> Scene:
    return scene_from_dict(json.loads(text))


# ---------------------------------------------------------------------------
# SVG serialization


def _fmt(v: float) -> str:
    out = f"{v:.6g}"
    if out == "-0":
        return "0"
    return out


_INSIDE, _LEFT, _RIGHT, _BOTTOM, _TOP = 0, 1, 2, 4, 8


def _outcode(vp: Viewport, x: float, y: float) -> int:
    code = _INSIDE
    if x < vp.xmin:
        code |= _LEFT
    elif x > vp.xmax:
        code |= _RIGHT
    if y < vp.ymin:
        code |= _BOTTOM
    elif y > vp.ymax:
        code |= _TOP
    return code


def clip_segment(vp: Viewport, p: Tuple[float, float], q: Tuple[float, float]):
    """Cohen-Sutherland clip of segment p-q to the viewport; None when fully outside."""
    x0, y0 = p
    x1, y1 = q
    c0, c1 = _outcode(vp, x0, y0), _outcode(vp, x1, y1)
    while True:
        if not (c0 | c1):
            return ((x0, y0), (x1, y1))
        if c0 & c1:
            return None
        c = c0 or c1
        if c & _TOP:
            x = x0 + (x1 - x0) * (vp.ymax - y0) / (y1 - y0)
            y = vp.ymax
        elif c & _BOTTOM:
            x = x0 + (x1 - x0) * (vp.ymin - y0) / (y1 - y0)
            y = vp.ymin
        elif c & _RIGHT:
            y = y0 + (y1 - y0) * (vp.xmax - x0) / (x1 - x0)
            x = vp.xmax
        else:
            y = y0 + (y1 - y0) * (vp.xmin - x0) / (x1 - x0)
            x = vp.xmin
        if c == c0:
            x0, y0, c0 = x, y, _outcode(vp, x, y)
        else:
            x1, y1, c1 = x, y, _outcode(vp, x, y)


def extended_line_clipped(vp: Viewport, p: Tuple[float, float], q: Tuple[float, float]):
    """The full line through p and q, clipped to the viewport."""
    dx, dy = q[0] - p[0], q[1] - p[1]
    n = math.hypot(dx, dy)
    if n == 0:
        return None
    reach = 4.0 * (abs(vp.xmax - vp.xmin) + abs(vp.ymax - vp.ymin) + abs(p[0]) + abs(p[1])) / n
    a = (p[0] - dx * reach, p[1] - dy * reach)
    b = (p[0] + dx * reach, p[1] + dy * reach)
    return clip_segment(vp, a, b)


def scene_to_svg(s: Scene, width: int = 900) -> str:
    """Standalone SVG document; byte-stable for identical scenes."""
    vp = s.viewport
    xspan = vp.xmax - vp.xmin
    yspan = vp.ymax - vp.ymin
    height = max(int(round(width * yspan / xspan)), 120)

    def sx(x: float) -> float:
        return (x - vp.xmin) / xspan * width

    def sy(y: float) -> float:
        return (vp.ymax - y) / yspan * height

    def pt(x: float, y: float) -> str:
        return f"{_fmt(sx(x))},{_fmt(sy(y))}"

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        f'<rect width="{width}" height="{height}" fill="white"/>',
    ]

    # extended arrow lines, the envelope's grey background
    for a, b in s.arrows:
        seg = extended_line_clipped(vp, a, b)
        if seg is not None:
            parts.append(
                f'<line x1="{_fmt(sx(seg[0][0]))}" y1="{_fmt(sy(seg[0][1]))}" '
                f'x2="{_fmt(sx(seg[1][0]))}" y2="{_fmt(sy(seg[1][1]))}" '
                f'stroke="#cccccc" stroke-width="0.6"/>'
            )

    # vertical axes
    for ax in s.axes:
        if vp.xmin <= ax <= vp.xmax:
            parts.append(
                f'<line x1="{_fmt(sx(ax))}" y1="0" x2="{_fmt(sx(ax))}" y2="{height}" '
                f'stroke="#333333" stroke-width="1.2"/>'
            )
            parts.append(
                f'<text x="{_fmt(sx(ax) + 4)}" y="14" font-size="12" fill="#333333">'
                f"x = {_fmt(ax)}</text>"
            )

    # arrows with heads at the output axis
    for a, b in s.arrows:
        seg = clip_segment(vp, a, b)
        if seg is None:
            continue
        parts.append(
            f'<line x1="{_fmt(sx(seg[0][0]))}" y1="{_fmt(sy(seg[0][1]))}" '
            f'x2="{_fmt(sx(seg[1][0]))}" y2="{_fmt(sy(seg[1][1]))}" '
            f'stroke="#1f6fb2" stroke-width="1"/>'
        )
        if vp.contains(b[0], b[1]):
            ux, uy = sx(b[0]) - sx(a[0]), sy(b[1]) - sy(a[1])
            n = math.hypot(ux, uy)
            if n > 0:
                ux, uy = ux / n, uy / n
                px, py = -uy, ux
                tip = (sx(b[0]), sy(b[1]))
                base = (tip[0] - 7 * ux, tip[1] - 7 * uy)
                parts.append(
                    f'<polygon points="{_fmt(tip[0])},{_fmt(tip[1])} '
                    f'{_fmt(base[0] + 2.5 * px)},{_fmt(base[1] + 2.5 * py)} '
                    f'{_fmt(base[0] - 2.5 * px)},{_fmt(base[1] - 2.5 * py)}" fill="#1f6fb2"/>'
                )

    # focal branches; points are already on-curve and inside the viewport
    for branch in s.focal_branches:
        pts = " ".join(pt(x, y) for x, y in branch)
        parts.append(
            f'<polyline points="{pts}" fill="none" stroke="#c23b22" stroke-width="1.8"/>'
        )

    # guide line through collinear foci in composition scenes
    if len(s.foci) >= 3:
        seg = extended_line_clipped(vp, s.foci[0], s.foci[1])
        if seg is not None:
            parts.append(
                f'<line x1="{_fmt(sx(seg[0][0]))}" y1="{_fmt(sy(seg[0][1]))}" '
                f'x2="{_fmt(sx(seg[1][0]))}" y2="{_fmt(sy(seg[1][1]))}" '
                f'stroke="#888888" stroke-width="0.8" stroke-dasharray="5,4"/>'
            )

    for x, y in s.cusps:
        if vp.contains(x, y):
            parts.append(
                f'<circle cx="{_fmt(sx(x))}" cy="{_fmt(sy(y))}" r="4" '
                f'fill="none" stroke="#c23b22" stroke-width="1.5"/>'
            )

    for x, y in s.foci:
        if vp.contains(x, y):
            parts.append(f'<circle cx="{_fmt(sx(x))}" cy="{_fmt(sy(y))}" r="3.5" fill="#2a9d2a"/>')

    if s.probe is not None:
        if s.probe.focus is not None:
            fx, fy = s.probe.focus
            if vp.contains(fx, fy):
                parts.append(
                    f'<circle cx="{_fmt(sx(fx))}" cy="{_fmt(sy(fy))}" r="4.5" fill="#7b2d8b"/>'
                )
            readout = f"f'({_fmt(s.probe.x0)}) = {_fmt(s.probe.fprime)}"
        else:
            readout = f"f'({_fmt(s.probe.x0)}) = {_fmt(s.probe.fprime)} (focus at infinity)"
        parts.append(
            f'<text x="10" y="{height - 10}" font-size="13" fill="#7b2d8b">{readout}</text>'
        )

    if s.implicit is not None:
        parts.append(
            f'<text x="10" y="{height - 30}" font-size="13" fill="#333333">'
            f"{_escape(s.implicit)}</text>"
        )

    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def _escape(text: str) -> str:
    return text.replace("&", "&amp;").replace("<", "&lt;").replace(">", "&gt;")
