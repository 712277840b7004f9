"""Command-line interface.

Exit codes: 0 success, 1 argument or expression parse errors, 2 errors of
the mathematics (non-rational function where an exact equation is required,
degenerate members, evaluation outside the domain).
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import List, Optional

from . import algebra
from .algebra import (
    DegenerateFamily,
    DegenerateParametrization,
    NotAConic,
    Poly2,
    RationalFunction,
    classify_conic,
    focal_triple,
    implicitize,
)
from .expr import DomainError, ParseError, parse, to_rational_function
from .focal import (
    AxesConfig,
    EmptyRange,
    InvalidFocus,
    SingularParameter,
    focal_point,
    focal_tangent,
    probe as probe_at,
)
from .geometry import collinearity_residual
from .render import RenderConfig, Viewport, build_scene, scene_to_json, scene_to_svg
from .selftest import run_all
from .transforms import (
    AddConstant,
    DegenerateResult,
    ScaleInput,
    ScaleOutput,
    ShiftInput,
    compose_linear_foci,
    transform_implicit,
)

_MATH_ERRORS = (
    DomainError,
    DegenerateFamily,
    DegenerateParametrization,
    DegenerateResult,
    NotAConic,
    EmptyRange,
    InvalidFocus,
    SingularParameter,
    ZeroDivisionError,
)

_KINDS = {
    "add-constant": AddConstant,
    "scale-output": ScaleOutput,
    "shift-input": ShiftInput,
    "scale-input": ScaleInput,
}


class _MathError(Exception):
    pass


def _parse_range(text: str):
    parts = text.split(":")
    if len(parts) != 2:
        raise argparse.ArgumentTypeError("range must look like A:B")
    try:
        lo, hi = float(parts[0]), float(parts[1])
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc
    if not lo < hi:
        raise argparse.ArgumentTypeError("range must be nonempty")
    return (lo, hi)


def _build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="focalcurves",
        description="Arrow graphs of real functions and their focal curves.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("plot", help="render an arrow-graph scene to SVG or JSON")
    sp.add_argument("f", help="function expression, e.g. \"x^2\"")
    sp.add_argument("--svg", metavar="PATH", help="write an SVG document")
    sp.add_argument("--json", metavar="PATH", help="write scene JSON ('-' for stdout)")
    sp.add_argument("--delta", type=float, default=1.0)
    sp.add_argument("--range", type=_parse_range, default=(-2.0, 2.0),
                    help="input range A:B for arrows and focal samples")
    sp.add_argument("--arrows", type=int, default=21)
    sp.add_argument("--samples", type=int, default=401)
    sp.add_argument("--g", help="outer function: plot the composition g(f(x))")
    sp.add_argument("--probe", type=float, help="probe input x0")

    sp = sub.add_parser("focal", help="focal point and tangent at one parameter")
    sp.add_argument("f")
    sp.add_argument("--at", type=float, required=True)
    sp.add_argument("--delta", type=float, default=1.0)
    sp.add_argument("--json", action="store_true")

    sp = sub.add_parser("implicit", help="exact implicit focal equation of a rational function")
    sp.add_argument("f")
    sp.add_argument("--json", action="store_true")

    sp = sub.add_parser("classify", help="classify a conic given as Poly2 JSON")
    sp.add_argument("--poly2", required=True, help="Poly2 JSON text")
    sp.add_argument("--json", action="store_true")

    sp = sub.add_parser("transform", help="transform the implicit focal equation of g")
    sp.add_argument("--g", required=True, help="base function expression")
    sp.add_argument("--kind", required=True, choices=sorted(_KINDS))
    sp.add_argument("--c", required=True, help="transform parameter (rational, e.g. 1/2)")
    sp.add_argument("--json", action="store_true")

    sp = sub.add_parser("compose", help="foci of g(f(x)) for linear f and g")
    sp.add_argument("--f", required=True, help="inner linear function, e.g. \"2x - 2\"")
    sp.add_argument("--g", required=True, help="outer linear function, e.g. \"2x + 3\"")
    sp.add_argument("--delta", type=float, default=1.0)
    sp.add_argument("--json", action="store_true")

    sp = sub.add_parser("probe", help="local focus and derivative readout at x0")
    sp.add_argument("f")
    sp.add_argument("--x0", type=float, required=True)
    sp.add_argument("--delta", type=float, default=1.0)
    sp.add_argument("--json", action="store_true")

    sp = sub.add_parser("serve", help="HTTP JSON API (and optional static explorer files)")
    sp.add_argument("--port", type=int, default=8642)
    sp.add_argument("--host", default="127.0.0.1")
    sp.add_argument("--static", metavar="DIR", help="serve this directory at /")

    sub.add_parser("selftest", help="run the acceptance checks and print pass/fail")
    return p


def _fmt_num(v: float) -> str:
    return f"{v:.12g}"


def _proj_or_affine(p) -> list:
    a = p.affine()
    if a is not None:
        return [a.x + 0.0, a.y + 0.0]  # adding +0.0 folds -0.0 into 0.0
    return [p.x, p.y, p.z]


def _implicit_payload(f_text: str) -> dict:
    rf = to_rational_function(parse(f_text))
    if not isinstance(rf, RationalFunction):
        raise _MathError("the function is not a ratio of polynomials; "
                         "no exact implicit equation exists")
    g = implicitize(*focal_triple(rf))
    cls: Optional[str] = None
    if g.total_degree() == 2:
        cls = classify_conic(g).value
    return {
        "equation": g.equation_str() + " = 0",
        "degree": g.total_degree(),
        "class": cls,
        "poly2": g.to_json_obj(),
    }


def _linear_params(text: str):
    from .focal import linear_params_of

    f = parse(text)
    p = linear_params_of(f)
    if p is None:
        raise _MathError(f"{text!r} is not linear")
    return p


def _transform_payload(g_text: str, kind_name: str, c_text: str) -> dict:
    try:
        c = Fraction(c_text)
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"bad transform parameter {c_text!r}", 0, frozenset()) from exc
    kind = _KINDS[kind_name](c)
    rf = to_rational_function(parse(g_text))
    if not isinstance(rf, RationalFunction):
        raise _MathError("the base function is not rational")
    res = transform_implicit(implicitize(*focal_triple(rf)), kind)
    cls = classify_conic(res).value if res.total_degree() == 2 else None
    return {
        "equation": res.equation_str() + " = 0",
        "degree": res.total_degree(),
        "class": cls,
        "poly2": res.to_json_obj(),
    }


def _compose_payload(a: float, b: float, c: float, d: float, delta: float) -> dict:
    res = compose_linear_foci(a, b, c, d, AxesConfig(delta))
    resid = collinearity_residual(res.f_focus, res.g_focus, res.gf_focus)
    return {
        "Ff": _proj_or_affine(res.f_focus),
        "Fg": _proj_or_affine(res.g_focus),
        "Fgf": _proj_or_affine(res.gf_focus),
        "t": res.t,
        "collinear": resid <= 1e-9,
    }


def _probe_payload(f_text: str, x0: float, delta: float) -> dict:
    pr = probe_at(parse(f_text), x0, AxesConfig(delta))
    return {
        "focus": None if pr.focus is None else [pr.focus.x, pr.focus.y],
        "projective": [pr.point.x, pr.point.y, pr.point.z],
        "fprime": pr.fprime,
    }


def _cmd_plot(args) -> int:
    f = parse(args.f)
    g = parse(args.g) if args.g else None
    cfg = RenderConfig(
        arrow_count=args.arrows,
        arrow_range=args.range,
        focal_sample_count=args.samples,
        focal_range=args.range,
        delta=args.delta,
        probe_x0=args.probe,
    )
    scene = build_scene(f, cfg, g)
    wrote = False
    if args.svg:
        with open(args.svg, "w", encoding="utf-8") as fh:
            fh.write(scene_to_svg(scene))
        print(f"wrote {args.svg}")
        wrote = True
    if args.json:
        text = scene_to_json(scene)
        if args.json == "-":
            print(text)
        else:
            with open(args.json, "w", encoding="utf-8") as fh:
                fh.write(text)
            print(f"wrote {args.json}")
        wrote = True
    if not wrote:
        print(scene_to_json(scene))
    return 0


def _cmd_focal(args) -> int:
    f = parse(args.f)
    cfg = AxesConfig(args.delta)
    p = focal_point(f, args.at, cfg)
    affine = p.affine()
    try:
        tangent = focal_tangent(f, args.at)
    except SingularParameter:
        tangent = None
    if args.json:
        print(json.dumps({
            "projective": [p.x, p.y, p.z],
            "affine": None if affine is None else [affine.x, affine.y],
            "tangent": None if tangent is None else list(tangent),
        }))
        return 0
    if affine is None:
        print(f"focal point at infinity ({_fmt_num(p.x)} : {_fmt_num(p.y)} : {_fmt_num(p.z)})")
    else:
        print(f"focal point ({_fmt_num(affine.x)}, {_fmt_num(affine.y)}) "
              f"[{_fmt_num(p.x)} : {_fmt_num(p.y)} : {_fmt_num(p.z)}]")
    if tangent is None:
        print("tangent undefined (cusp, line point, or focus at infinity)")
    else:
        print(f"tangent direction ({_fmt_num(tangent[0])}, {_fmt_num(tangent[1])})")
    return 0


def _cmd_implicit(args) -> int:
    payload = _implicit_payload(args.f)
    if args.json:
        print(json.dumps(payload))
    else:
        suffix = f" [{payload['class']}]" if payload["class"] else ""
        print(payload["equation"] + suffix)
    return 0


def _cmd_classify(args) -> int:
    try:
        g = Poly2.from_json(args.poly2)
    except (ValueError, KeyError, TypeError) as exc:
        raise ParseError(f"bad Poly2 JSON: {exc}", 0, frozenset()) from exc
    cls = classify_conic(g)
    if args.json:
        print(json.dumps({"class": cls.value}))
    else:
        print(cls.value)
    return 0


def _cmd_transform(args) -> int:
    payload = _transform_payload(args.g, args.kind, args.c)
    if args.json:
        print(json.dumps(payload))
    else:
        suffix = f" [{payload['class']}]" if payload["class"] else ""
        print(payload["equation"] + suffix)
    return 0


def _cmd_compose(args) -> int:
    pf = _linear_params(args.f)
    pg = _linear_params(args.g)
    payload = _compose_payload(pf.a, pf.b, pg.a, pg.b, args.delta)
    if args.json:
        print(json.dumps(payload))
        return 0
    for label, key in (("F_f", "Ff"), ("F_g", "Fg"), ("F_gf", "Fgf")):
        v = payload[key]
        if len(v) == 2:
            print(f"{label} = ({_fmt_num(v[0])}, {_fmt_num(v[1])})")
        else:
            print(f"{label} at infinity ({_fmt_num(v[0])} : {_fmt_num(v[1])} : {_fmt_num(v[2])})")
    print(f"t = {'undefined (a*c = 1)' if payload['t'] is None else _fmt_num(payload['t'])}")
    print(f"collinear: {'yes' if payload['collinear'] else 'NO'}")
    return 0


def _cmd_probe(args) -> int:
    payload = _probe_payload(args.f, args.x0, args.delta)
    if args.json:
        print(json.dumps(payload))
        return 0
    if payload["focus"] is None:
        print(f"focus at infinity, fprime {_fmt_num(payload['fprime'])}")
    else:
        print(f"focus ({_fmt_num(payload['focus'][0])}, {_fmt_num(payload['focus'][1])}), "
              f"fprime {_fmt_num(payload['fprime'])}")
    return 0


def _cmd_serve(args) -> int:
    from .server import serve

    serve(args.host, args.port, args.static)
    return 0


def _cmd_selftest(_args) -> int:
    results = run_all(write=print)
    passed = sum(1 for r in results if r.passed)
    print(f"{passed}/{len(results)} acceptance checks passed")
    return 0 if passed == len(results) else 2


_COMMANDS = {
    "plot": _cmd_plot,
    "focal": _cmd_focal,
    "implicit": _cmd_implicit,
    "classify": _cmd_classify,
    "transform": _cmd_transform,
    "compose": _cmd_compose,
    "probe": _cmd_probe,
    "serve": _cmd_serve,
    "selftest": _cmd_selftest,
}


def main(argv: Optional[List[str]] = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on flag errors and 0 on --help; fold into our contract
        return 0 if exc.code in (0, None) else 1
    try:
        return _COMMANDS[args.command](args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 1
    except _MathError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except _MATH_ERRORS as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"invalid arguments: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
