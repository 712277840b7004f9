"""Acceptance checks: every mathematical claim the package rests on.

Each check is a named callable that raises CheckFailure with a reason, or
returns a one-line detail string on success.  The CLI `selftest` command and
the acceptance test suite both run exactly this list.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, List, Optional, Tuple

from . import algebra
from .algebra import (
    Poly1,
    Poly2,
    RationalFunction,
    conic_from_family,
    expected_degree,
    focal_triple,
    implicitize,
    poly1_gcd,
    poly2_gcd,
    resultant_in_t,
    vertical_axis_meet,
)
from .expr import DomainError, evaluate, differentiate, parse, to_rational_function
from .focal import (
    SingularParameter,
    derivative_from_focus,
    dual_point,
    duality_map,
    focal_point,
    focal_tangent,
    probe,
    projectively_equal,
    sample_focal_curve,
    detect_cusps,
)
from .geometry import collinearity_residual
from .transforms import (
    AddConstant,
    ScaleInput,
    ScaleOutput,
    ShiftInput,
    apply_to_function,
    compose_linear_foci,
    shear_for_period,
    transform_implicit,
)


class CheckFailure(AssertionError):
    pass


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str


HYPERBOLA = Poly2({(2, 0): 1, (1, 1): 4, (1, 0): -2, (0, 0): 1})  # (x-1)^2 + 4xy
CIRCLE = Poly2({(2, 0): 1, (0, 2): 1, (1, 0): -1})  # x^2 + y^2 - x
PARABOLA = Poly2({(0, 2): 1, (1, 0): -4})  # y^2 - 4x

_CORPUS = (
    ("x^2", (-3.0, 3.0)),
    ("1/(4x)", (-3.0, 3.0)),
    ("x + 1/x", (-3.0, 3.0)),
    ("exp(x)", (-3.0, 3.0)),
    ("sin(x)", (0.0, 2.0 * math.pi)),
)


def _require(cond: bool, message: str):
    if not cond:
        raise CheckFailure(message)


def _implicit_of(text: str) -> Poly2:
    rf = to_rational_function(parse(text))
    _require(isinstance(rf, RationalFunction), f"{text} should be rational")
    return implicitize(*focal_triple(rf))


def _random_params(rng: random.Random, fn_text: str, lo: float, hi: float, count: int) -> List[float]:
    f = parse(fn_text)
    fp = differentiate(f)
    out: List[float] = []
    attempts = 0
    while len(out) < count and attempts < 50 * count:
        attempts += 1
        t = rng.uniform(lo, hi)
        try:
            evaluate(f, t)
            evaluate(fp, t)
        except DomainError:
            continue
        out.append(t)
    _require(len(out) == count, f"could not draw {count} in-domain parameters for {fn_text}")
    return out


# ---------------------------------------------------------------------------


def check_implicit_equations_exact() -> str:
    """x^2, 1/(4x), x + 1/x give their known conics by exact elimination."""
    cases = (("x^2", HYPERBOLA), ("1/(4x)", CIRCLE), ("x + 1/x", PARABOLA))
    for text, expected in cases:
        got = _implicit_of(text)
        _require(got == expected,
                 f"implicit of {text}: got {got.equation_str()}, want {expected.equation_str()}")
    return "3 implicit equations match exactly"


def check_conic_family_closed_form() -> str:
    """Closed-form conic coefficients agree with elimination on 50 random members."""
    rng = random.Random(90125)
    done = 0
    while done < 50:
        a, b, c, d, e = (rng.randint(-5, 5) for _ in range(5))
        if d == 0 and e == 0:
            continue
        rf = RationalFunction(Poly1([c, b, a]), Poly1([e, d]))
        if rf.is_affine():
            continue
        closed = conic_from_family(a, b, c, d, e)
        eliminated = implicitize(*focal_triple(rf))
        _require(closed == eliminated,
                 f"family {(a, b, c, d, e)}: closed {closed.equation_str()} "
                 f"!= eliminated {eliminated.equation_str()}")
        done += 1
    return "50 random family members agree exactly"


def check_transcendental_focal_equations() -> str:
    """Sampled foci of exp and sqrt satisfy their explicit focal equations."""
    worst = 0.0
    samples = sample_focal_curve(parse("exp(x)"), -3.0, 3.0, 200)
    n_exp = 0
    for s in samples:
        if s is None or s.affine is None:
            continue
        x, y = s.affine.x, s.affine.y
        r = abs(y - (x - 1.0) * (1.0 - math.log((x - 1.0) / x)))
        worst = max(worst, r)
        _require(r <= 1e-9, f"exp focal equation residual {r} at t = {s.t}")
        n_exp += 1
    samples = sample_focal_curve(parse("sqrt(x)"), 0.01, 4.0, 200)
    n_sqrt = 0
    for s in samples:
        if s is None or s.affine is None:
            continue
        x, y = s.affine.x, s.affine.y
        _require(x < 0.0 or x > 1.0, f"sqrt focal x = {x} inside [0, 1]")
        r = abs(y - x * x / (4.0 * (x - 1.0)))
        worst = max(worst, r)
        _require(r <= 1e-9, f"sqrt focal equation residual {r} at t = {s.t}")
        n_sqrt += 1
    _require(n_exp >= 190 and n_sqrt >= 190, "too few affine samples")
    return f"{n_exp} exp + {n_sqrt} sqrt samples, worst residual {worst:.2e}"


def check_duality_correspondence() -> str:
    """The linear duality map carries dual points onto focal points."""
    rng = random.Random(4821)
    total = 0
    for text, (lo, hi) in _CORPUS:
        f = parse(text)
        for t in _random_params(rng, text, lo, hi, 200):
            u = duality_map(dual_point(f, t))
            v = focal_point(f, t)
            _require(projectively_equal(u, v, 1e-9),
                     f"duality mismatch for {text} at t = {t}")
            total += 1
    return f"{total} projective comparisons within 1e-9"


def check_envelope_tangency() -> str:
    """Focal-curve velocity is parallel to the arrow vector (1, f(t) - t)."""
    rng = random.Random(77002)
    total = 0
    for text, (lo, hi) in _CORPUS:
        f = parse(text)
        for t in _random_params(rng, text, lo, hi, 200):
            try:
                tangent = focal_tangent(f, t)
            except SingularParameter:
                continue
            if tangent is None:
                continue
            v = evaluate(f, t)
            ax, ay = 1.0, v - t
            cx = tangent[0] * ay - tangent[1] * ax
            norm = math.hypot(*tangent) * math.hypot(ax, ay)
            _require(abs(cx) <= 1e-9 * norm, f"tangent not parallel for {text} at t = {t}")
            total += 1
    return f"{total} tangent directions parallel within 1e-9"


def check_derivative_readout() -> str:
    """The focus position inverts to the derivative: probe and corpus identity."""
    pr = probe(parse("x^2"), -1.0)
    _require(abs(pr.fprime - (-2.0)) <= 1e-12, f"probe fprime {pr.fprime} != -2")
    _require(pr.focus is not None, "probe focus should be affine")
    _require(abs(pr.focus.x - 1.0 / 3.0) <= 1e-12 and abs(pr.focus.y + 1.0 / 3.0) <= 1e-12,
             f"probe focus {pr.focus} != (1/3, -1/3)")
    rng = random.Random(31247)
    total = 0
    for text, (lo, hi) in _CORPUS:
        f = parse(text)
        fp = differentiate(f)
        for t in _random_params(rng, text, lo, hi, 200):
            d1 = evaluate(fp, t)
            if abs(d1 - 1.0) <= 1e-6:
                continue
            p = focal_point(f, t).affine()
            if p is None or p.x == 0:
                continue
            back = derivative_from_focus(p.x)
            _require(abs(back - d1) <= 1e-9 * (1.0 + abs(d1)),
                     f"readout inversion off for {text} at t = {t}: {back} vs {d1}")
            total += 1
    return f"readout -2 at x0 = -1; {total} inversion identities within 1e-9"


def _poly_expr(coeffs: List[int]) -> RationalFunction:
    return RationalFunction(Poly1(coeffs), Poly1.one())


def _critical_values_distinct(p: Poly1) -> bool:
    dp = p.derivative()
    if poly1_gcd(dp, dp.derivative()).degree() > 0:
        return False
    # critical-value polynomial: eliminate t from f(t) - y and f'(t)
    f_t = [Poly2.constant(c) for c in p.coeffs]
    f_t[0] = f_t[0] - Poly2.y()
    g_t = [Poly2.constant(c) for c in dp.coeffs]
    v = resultant_in_t(f_t, g_t)
    if v.is_zero():
        return False
    return poly2_gcd(v, v.derivative("y")).is_constant()


def check_degree_laws() -> str:
    """Implicit degree equals d for generic degree-d polynomials and respects
    the rational-function degree bound with ≥ 90% equality."""
    rng = random.Random(55901)
    for d in (3, 4, 5):
        produced = 0
        while produced < 4:
            coeffs = [rng.randint(-4, 4) for _ in range(d)] + [rng.choice([-3, -2, -1, 1, 2, 3])]
            p = Poly1(coeffs)
            if p.degree() != d or not _critical_values_distinct(p):
                continue
            g = implicitize(*focal_triple(_poly_expr(coeffs)))
            _require(g.total_degree() == d,
                     f"degree {g.total_degree()} != {d} for polynomial {coeffs}")
            produced += 1
    done = 0
    equal = 0
    exceptions: List[str] = []
    while done < 30:
        dp = rng.randint(0, 4)
        dq = rng.randint(0, 3)
        pc = [rng.randint(-4, 4) for _ in range(dp)] + [rng.choice([-3, -2, -1, 1, 2, 3])]
        qc = [rng.randint(-4, 4) for _ in range(dq)] + [rng.choice([1, 2, 3])]
        p, q = Poly1(pc), Poly1(qc)
        if poly1_gcd(p, q).degree() > 0:
            continue
        rf = RationalFunction(p, q)
        if rf.is_affine():
            continue
        bound = expected_degree(dp, dq)
        try:
            g = implicitize(*focal_triple(rf))
        except algebra.DegenerateParametrization:
            continue
        deg = g.total_degree()
        _require(deg <= bound, f"degree {deg} exceeds bound {bound} for P={pc}, Q={qc}")
        if deg == bound:
            equal += 1
        else:
            exceptions.append(f"P={pc}, Q={qc}: {deg} < {bound}")
        done += 1
    _require(equal >= 27, f"equality rate {equal}/30 below 90%; exceptions: {exceptions}")
    extra = f"; strict cases: {'; '.join(exceptions)}" if exceptions else ""
    return f"12 generic polynomial degrees exact; bound met 30/30, equality {equal}/30{extra}"


def check_transformation_laws() -> str:
    """Transformed implicit equations vanish on sampled foci of transformed functions."""
    total = 0
    worst = 0.0
    for base_text, g_poly in (("x^2", HYPERBOLA), ("1/(4x)", CIRCLE), ("x + 1/x", PARABOLA)):
        lo, hi = -3.0, 3.0
        base = parse(base_text)
        for make in (AddConstant, ScaleOutput, ShiftInput, ScaleInput):
            for c in (Fraction(-2), Fraction(-1), Fraction(1, 2), Fraction(2), Fraction(3)):
                kind = make(c)
                transformed = transform_implicit(g_poly, kind)
                scale = max(abs(v) for v in transformed.terms.values())
                scaled = transformed.scale(Fraction(1) / scale)
                f = apply_to_function(kind, base)
                samples = sample_focal_curve(f, lo, hi, 200)
                for s in samples:
                    if s is None or s.affine is None:
                        continue
                    r = abs(scaled.eval(s.affine.x, s.affine.y))
                    worst = max(worst, r)
                    _require(
                        r <= 1e-8,
                        f"residual {r} for {base_text} under {kind} at t = {s.t}",
                    )
                    total += 1
    return f"{total} samples across 60 transformed curves, worst residual {worst:.2e}"


def check_periodic_shear_and_cusp() -> str:
    """Adjacent-period focal samples of sin correspond under the period shear,
    and the cusp sits at (1/2, pi/2)."""
    f = parse("sin(x)")
    first = [s.affine for s in sample_focal_curve(f, 0.0, 2.0 * math.pi, 200)
             if s is not None and s.affine is not None]
    second = [s.affine for s in sample_focal_curve(f, 2.0 * math.pi, 4.0 * math.pi, 200)
              if s is not None and s.affine is not None]
    _require(len(first) == len(second) and len(first) >= 190, "sample counts differ")
    fwd = shear_for_period(2.0 * math.pi)
    back = shear_for_period(-2.0 * math.pi)
    mapped_second = [fwd.apply(p.x, p.y) for p in second]
    mapped_first = [back.apply(p.x, p.y) for p in first]
    h1 = _hausdorff(mapped_second, [(p.x, p.y) for p in first])
    h2 = _hausdorff(mapped_first, [(p.x, p.y) for p in second])
    _require(h1 <= 1e-6, f"shear image of the second period misses the first: {h1}")
    _require(h2 <= 1e-6, f"shear preimage of the first period misses the second: {h2}")
    cusps = detect_cusps(f, 0.0, 2.0 * math.pi)
    _require(len(cusps) == 1, f"expected one cusp, found {len(cusps)}")
    t, pt = cusps[0]
    _require(abs(pt.x - 0.5) <= 1e-9 and abs(pt.y - math.pi / 2.0) <= 1e-9,
             f"cusp at ({pt.x}, {pt.y}), want (0.5, pi/2)")
    return f"Hausdorff {max(h1, h2):.2e}; cusp at ({pt.x:.12f}, {pt.y:.12f}), t = {t:.12f}"


def _hausdorff(a: List[Tuple[float, float]], b: List[Tuple[float, float]]) -> float:
    def one_sided(p, q):
        worst = 0.0
        for x, y in p:
            best = min((x - u) ** 2 + (y - v) ** 2 for u, v in q)
            worst = max(worst, best)
        return math.sqrt(worst)

    return max(one_sided(a, b), one_sided(b, a))


def check_linear_composition() -> str:
    """Juxtaposed foci of linear compositions interpolate and stay collinear."""
    res = compose_linear_foci(2.0, -2.0, 2.0, 3.0)
    for got, want in (
        (res.f_focus.affine(), (-1.0, 2.0)),
        (res.g_focus.affine(), (0.0, -3.0)),
        (res.gf_focus.affine(), (-2.0 / 3.0, 1.0 / 3.0)),
    ):
        _require(got is not None, "expected affine focus")
        _require(abs(got.x - want[0]) <= 1e-12 and abs(got.y - want[1]) <= 1e-12,
                 f"focus {got} != {want}")
    _require(res.t is not None and abs(res.t - 1.0 / 3.0) <= 1e-12, f"t = {res.t} != 1/3")
    fa, ga, ca = res.f_focus.affine(), res.g_focus.affine(), res.gf_focus.affine()
    ix = (1.0 - res.t) * fa.x + res.t * ga.x
    iy = (1.0 - res.t) * fa.y + res.t * ga.y
    _require(abs(ix - ca.x) <= 1e-12 and abs(iy - ca.y) <= 1e-12, "interpolation identity fails")

    rng = random.Random(660311)
    worst = 0.0
    for i in range(500):
        if i % 10 == 0:
            a = rng.uniform(-3.0, 3.0) or 0.5
            c = 1.0 / a
            b, d = rng.uniform(-3.0, 3.0), rng.uniform(-3.0, 3.0)
        else:
            a, b, c, d = (rng.uniform(-3.0, 3.0) for _ in range(4))
        r = compose_linear_foci(a, b, c, d)
        resid = collinearity_residual(r.f_focus, r.g_focus, r.gf_focus)
        worst = max(worst, resid)
        _require(resid <= 1e-9, f"collinearity residual {resid} for {(a, b, c, d)}")
        if r.t is not None:
            fa, ga, ca = r.f_focus.affine(), r.g_focus.affine(), r.gf_focus.affine()
            if fa is not None and ga is not None and ca is not None:
                ex = (1.0 - r.t) * fa.x + r.t * ga.x - ca.x
                ey = (1.0 - r.t) * fa.y + r.t * ga.y - ca.y
                # near a*c = 1 both t and the composite focus blow up like
                # 1/(1 - a*c), so the float error scales with |t| and |Fgf|
                scale = (1.0 + abs(r.t)) * (
                    1.0 + math.hypot(fa.x, fa.y) + math.hypot(ga.x, ga.y)
                ) + math.hypot(ca.x, ca.y)
                _require(math.hypot(ex, ey) <= 1e-9 * scale,
                         f"interpolation residual for {(a, b, c, d)}")
    return f"pinned instance exact; 500 quadruples collinear, worst residual {worst:.2e}"


def check_vertical_axis_tangency() -> str:
    """Family focal conics touch the input axis exactly at (0, -e/d), vertically."""
    rng = random.Random(130827)
    done = 0
    while done < 20:
        a, b, c = (rng.randint(-5, 5) for _ in range(3))
        d = rng.choice([v for v in range(-5, 6) if v != 0])
        e = rng.randint(-5, 5)
        rf = RationalFunction(Poly1([c, b, a]), Poly1([e, d]))
        if rf.is_affine():
            continue
        g = conic_from_family(a, b, c, d, e)
        meets = vertical_axis_meet(g, rf)
        _require(len(meets) == 1, f"{(a, b, c, d, e)}: {len(meets)} axis meets, want 1")
        point, vertical = meets[0]
        want = -Fraction(e, d)
        _require(abs(point.y - float(want)) <= 1e-12 and point.x == 0.0,
                 f"{(a, b, c, d, e)}: meet at {point}, want (0, {want})")
        _require(vertical, f"{(a, b, c, d, e)}: tangent not vertical at the axis")
        done += 1
    return "20 family members touch x = 0 only at (0, -e/d), tangent vertical"


CHECKS: List[Tuple[str, Callable[[], str]]] = [
    ("implicit-equations-exact", check_implicit_equations_exact),
    ("conic-family-closed-form", check_conic_family_closed_form),
    ("transcendental-focal-equations", check_transcendental_focal_equations),
    ("duality-correspondence", check_duality_correspondence),
    ("envelope-tangency", check_envelope_tangency),
    ("derivative-readout", check_derivative_readout),
    ("degree-laws", check_degree_laws),
    ("transformation-laws", check_transformation_laws),
    ("periodic-shear-and-cusp", check_periodic_shear_and_cusp),
    ("linear-composition", check_linear_composition),
    ("vertical-axis-tangency", check_vertical_axis_tangency),
]


def run_check(name: str, fn: Callable[[], str]) -> CheckResult:
    try:
        detail = fn()
        return CheckResult(name, True, detail)
    except CheckFailure as exc:
        return CheckResult(name, False, str(exc))
    except Exception as exc:  # noqa: BLE001 - a crash is a failed criterion
        return CheckResult(name, False, f"crashed: {exc!r}")


def run_all(write: Optional[Callable[[str], None]] = None) -> List[CheckResult]:
    results = []
    for name, fn in CHECKS:
        r = run_check(name, fn)
        results.append(r)
        if write is not None:
            status = "PASS" if r.passed else "FAIL"
            write(f"{status} {r.name}: {r.detail}")
    return results
