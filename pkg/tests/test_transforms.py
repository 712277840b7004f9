"""Coordinate maps induced on focal curves by the four function transforms.

Each law is certified two independent ways: the transformed function is
re-eliminated from scratch and its implicit equation compared, exactly,
with the coordinate-map image of the base equation.
"""

import math
import random
from fractions import Fraction

import pytest

from focalcurves.algebra import Poly2, focal_triple, implicitize
from focalcurves.expr import evaluate, parse, to_rational_function
from focalcurves.focal import AxesConfig, ProjectivePoint, projectively_equal
from focalcurves.geometry import collinearity_residual
from focalcurves.transforms import (
    AddConstant,
    DegenerateResult,
    ScaleInput,
    ScaleOutput,
    ShiftInput,
    apply_to_function,
    compose_linear_foci,
    shear_for_period,
    substitution_map,
    transform_implicit,
)

X = Poly2.x()
Y = Poly2.y()
ONE = Poly2.one()
HYPERBOLA = X * X + (X * Y).scale(4) - X.scale(2) + ONE

BASES = ("x^2", "1/(4x)", "x + 1/x")
PARAMS = (Fraction(-2), Fraction(-1), Fraction(1, 2), Fraction(2), Fraction(3))


def _implicit_of(text_or_expr):
    e = parse(text_or_expr) if isinstance(text_or_expr, str) else text_or_expr
    return implicitize(*focal_triple(to_rational_function(e)))


def test_identity_parameters_leave_curves_unchanged():
    for kind in (AddConstant(0), ScaleOutput(1), ShiftInput(0), ScaleInput(1)):
        assert transform_implicit(HYPERBOLA, kind) == HYPERBOLA


def test_scale_kinds_reject_zero():
    with pytest.raises(ValueError):
        ScaleOutput(0)
    with pytest.raises(ValueError):
        ScaleInput(0)


def test_shift_input_frozen_example():
    # x^2 shifted to (x - 1)^2: expanded image is 5x^2 + 4xy - 6x + 1
    got = transform_implicit(HYPERBOLA, ShiftInput(1))
    assert got == _implicit_of("(x - 1)^2")
    assert got.equation_str() == "5*x^2 + 4*x*y - 6*x + 1"


def test_apply_to_function_semantics():
    f = parse("x^2")
    cases = (
        (AddConstant(Fraction(3)), lambda x: x * x + 3),
        (ScaleOutput(Fraction(-2)), lambda x: -2 * x * x),
        (ShiftInput(Fraction(1, 2)), lambda x: (x - 0.5) ** 2),
        (ScaleInput(Fraction(3)), lambda x: (3 * x) ** 2),
    )
    for kind, want in cases:
        g = apply_to_function(kind, f)
        for x in (-1.5, 0.0, 0.7, 2.0):
            assert evaluate(g, x) == pytest.approx(want(x), rel=1e-12, abs=1e-12)


@pytest.mark.parametrize("base", BASES)
@pytest.mark.parametrize("kind_cls", (AddConstant, ScaleOutput, ShiftInput, ScaleInput))
def test_transform_implicit_matches_fresh_elimination(base, kind_cls):
    g0 = _implicit_of(base)
    f = parse(base)
    for c in PARAMS:
        kind = kind_cls(c)
        transformed = apply_to_function(kind, f)
        assert transform_implicit(g0, kind) == _implicit_of(transformed)


def test_add_constant_composes_additively():
    one_step = transform_implicit(HYPERBOLA, AddConstant(5))
    two_step = transform_implicit(
        transform_implicit(HYPERBOLA, AddConstant(2)), AddConstant(3)
    )
    assert one_step == two_step


def test_scale_input_composes_multiplicatively():
    one_step = transform_implicit(HYPERBOLA, ScaleInput(6))
    two_step = transform_implicit(
        transform_implicit(HYPERBOLA, ScaleInput(2)), ScaleInput(3)
    )
    assert one_step == two_step


def test_substitution_map_denominators():
    # output scaling and input scaling move the curve projectively
    for kind in (ScaleOutput(2), ScaleInput(2)):
        m = substitution_map(kind)
        assert not m.den.is_zero()
    # the affine kinds have trivial denominator
    for kind in (AddConstant(2), ShiftInput(2)):
        m = substitution_map(kind)
        assert m.den == ONE


def test_transform_implicit_rejects_zero():
    with pytest.raises(DegenerateResult):
        transform_implicit(Poly2.zero(), ScaleInput(2))


def test_transform_round_trips_through_the_inverse_kind():
    pairs = (
        (AddConstant(Fraction(3)), AddConstant(Fraction(-3))),
        (ScaleOutput(Fraction(2)), ScaleOutput(Fraction(1, 2))),
        (ShiftInput(Fraction(5, 2)), ShiftInput(Fraction(-5, 2))),
        (ScaleInput(Fraction(-3)), ScaleInput(Fraction(-1, 3))),
    )
    for kind, inverse in pairs:
        assert transform_implicit(transform_implicit(HYPERBOLA, kind), inverse) == HYPERBOLA


def test_shear_fixes_the_output_axis_line():
    m = shear_for_period(2 * math.pi)
    for y in (-2.0, 0.0, 1.5):
        got = m.apply(1.0, y)
        assert got == pytest.approx((1.0, y))


def test_shear_round_trip_is_identity():
    rng = random.Random(83190)
    fwd = shear_for_period(2 * math.pi)
    back = shear_for_period(-2 * math.pi)
    for _ in range(100):
        x, y = rng.uniform(-4, 4), rng.uniform(-4, 4)
        rx, ry = back.apply(*fwd.apply(x, y))
        assert (rx, ry) == pytest.approx((x, y), abs=1e-12)


def test_shear_translates_proportionally_to_distance():
    m = shear_for_period(3.0)
    # at x = 1 + d the shift is 3d
    assert m.apply(2.0, 0.0) == pytest.approx((2.0, 3.0))
    assert m.apply(0.0, 0.0) == pytest.approx((0.0, -3.0))


def test_compose_linear_foci_known_instance():
    res = compose_linear_foci(2.0, -2.0, 2.0, 3.0)
    ff, fg, fgf = res.f_focus.affine(), res.g_focus.affine(), res.gf_focus.affine()
    assert (ff.x, ff.y) == pytest.approx((-1.0, 2.0), abs=1e-12)
    assert (fg.x, fg.y) == pytest.approx((0.0, -3.0), abs=1e-12)
    assert (fgf.x, fgf.y) == pytest.approx((-2 / 3, 1 / 3), abs=1e-12)
    assert res.t == pytest.approx(1 / 3, abs=1e-12)
    # interpolation: (1 - t) Ff + t Fg = Fgf
    assert (1 - res.t) * ff.x + res.t * fg.x == pytest.approx(fgf.x, abs=1e-12)
    assert (1 - res.t) * ff.y + res.t * fg.y == pytest.approx(fgf.y, abs=1e-12)


def test_compose_linear_foci_product_one_goes_to_infinity():
    res = compose_linear_foci(2.0, 1.0, 0.5, 1.0)
    assert res.t is None
    assert res.gf_focus.affine() is None
    assert collinearity_residual(res.f_focus, res.g_focus, res.gf_focus) <= 1e-9


def test_compose_foci_always_collinear():
    rng = random.Random(660311)
    for i in range(300):
        a, b, c, d = (rng.uniform(-5, 5) for _ in range(4))
        if i % 10 == 0 and abs(a) > 1e-6:
            c = 1.0 / a
        res = compose_linear_foci(a, b, c, d)
        assert collinearity_residual(res.f_focus, res.g_focus, res.gf_focus) <= 1e-9


def test_compose_juxtaposed_false_uses_single_stage_charts():
    res = compose_linear_foci(2.0, -2.0, 2.0, 3.0, juxtaposed=False)
    assert projectively_equal(res.g_focus, ProjectivePoint(1.0, 3.0, -1.0))
    assert projectively_equal(res.gf_focus, ProjectivePoint(1.0, -1.0, -3.0))


def test_compose_focus_formula_matches_direct_linear_focus():
    # the composite g(f(x)) = (ac) x + (bc + d) probed in its own chart
    from focalcurves.focal import LinearParams, linear_focus

    rng = random.Random(2218)
    for _ in range(50):
        a, b, c, d = (rng.uniform(-3, 3) for _ in range(4))
        res = compose_linear_foci(a, b, c, d, juxtaposed=False)
        direct = linear_focus(LinearParams(a * c, b * c + d))
        assert projectively_equal(res.gf_focus, direct, tol=1e-9)
