"""Transformation laws for implicit focal curves and linear-composition foci.

When f is built from g by adding a constant, scaling the output, shifting
the input, or scaling the input, the focal curve of f is the image of the
focal curve of g under an explicit plane map; this module produces those
maps, applies them to implicit equations, and computes the collinear foci
of a composition of linear functions.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

from .algebra import Poly2, substitute_rational
from .expr import Add, ExprNode, Mul, Num, Sub, Var, substitute
from .focal import AxesConfig, ProjectivePoint

Number = Union[int, float, Fraction]


class DegenerateResult(ValueError):
    """Clearing denominators annihilated the polynomial."""


@dataclass(frozen=True)
class AddConstant:
    """f(x) = g(x) + c."""

    c: Number


@dataclass(frozen=True)
class ScaleOutput:
    """f(x) = c * g(x), c nonzero."""

    c: Number

    def __post_init__(self):
        if self.c == 0:
            raise ValueError("c must be nonzero")


@dataclass(frozen=True)
class ShiftInput:
    """f(x) = g(x - c)."""

    c: Number


@dataclass(frozen=True)
class ScaleInput:
    """f(x) = g(c * x), c nonzero."""

    c: Number

    def __post_init__(self):
        if self.c == 0:
            raise ValueError("c must be nonzero")


TransformKind = Union[AddConstant, ScaleOutput, ShiftInput, ScaleInput]


@dataclass(frozen=True)
class PlaneMap:
    """Rational plane map (x, y) -> (u/den, v/den) with polynomial entries."""

    u: Poly2
    v: Poly2
    den: Poly2

    def __post_init__(self):
        if self.den.is_zero():
            raise ValueError("denominator must not vanish identically")

    def apply(self, x: float, y: float) -> tuple:
        w = self.den.eval(x, y)
        if w == 0:
            raise ZeroDivisionError("the plane map is singular at this point")
        return (self.u.eval(x, y) / w, self.v.eval(x, y) / w)


def substitution_map(kind: TransformKind) -> PlaneMap:
    """Plane map whose pullback carries g's implicit focal equation to f's.

    With f = g + c the map is (x, y - c*x); with f = c*g it is
    (c*x, y) / (1 + (c-1)*x); with f = g(x - c) it is (x, y + c*(x - 1));
    with f = g(c*x) it is (c*x, c*y) / (1 + (c-1)*x).
    """
    X, Y, one = Poly2.x(), Poly2.y(), Poly2.one()
    c = Fraction(kind.c)
    if isinstance(kind, AddConstant):
        return PlaneMap(X, Y - X.scale(c), one)
    if isinstance(kind, ScaleOutput):
        return PlaneMap(X.scale(c), Y, one + X.scale(c - 1))
    if isinstance(kind, ShiftInput):
        return PlaneMap(X, Y + (X - one).scale(c), one)
    if isinstance(kind, ScaleInput):
        return PlaneMap(X.scale(c), Y.scale(c), one + X.scale(c - 1))
    raise TypeError(f"not a transform kind: {kind!r}")


def apply_map_to_implicit(g: Poly2, m: PlaneMap) -> Poly2:
    """Substitute the map into g and clear denominators by the minimal power."""
    if g.is_zero():
        raise DegenerateResult("the zero polynomial has no transform")
    res = substitute_rational(g, m.u, m.v, m.den)
    if res.is_zero():
        raise DegenerateResult("clearing denominators annihilated the polynomial")
    if not m.den.is_constant():
        while True:
            try:
                res = res.exact_div(m.den)
            except ValueError:
                break
            if res.is_zero():
                raise DegenerateResult("clearing denominators annihilated the polynomial")
    return res.normalized()


def transform_implicit(g: Poly2, kind: TransformKind) -> Poly2:
    """Implicit focal equation of the transformed function.

    If g's focal curve satisfies g = 0, the returned polynomial vanishes on
    the focal curve of the function transformed per kind.
    """
    return apply_map_to_implicit(g, substitution_map(kind))


def apply_to_function(kind: TransformKind, g: ExprNode) -> ExprNode:
    """The transformed function itself: g + c, c*g, g(x - c) or g(c*x)."""
    c = Num(Fraction(kind.c))
    if isinstance(kind, AddConstant):
        return Add(g, c)
    if isinstance(kind, ScaleOutput):
        return Mul(c, g)
    if isinstance(kind, ShiftInput):
        return substitute(g, Sub(Var(), c))
    if isinstance(kind, ScaleInput):
        return substitute(g, Mul(c, Var()))
    raise TypeError(f"not a transform kind: {kind!r}")


def shear_for_period(c: Number) -> PlaneMap:
    """Shear (x, y) -> (x, y + c*(x - 1)) fixing the output axis x = 1.

    The focal curve of a function with period c is invariant under this
    shear; one period of samples maps onto the previous period's samples.
    """
    if c == 0:
        raise ValueError("c must be nonzero")
    X, Y, one = Poly2.x(), Poly2.y(), Poly2.one()
    return PlaneMap(X, Y + (X - one).scale(Fraction(c)), one)


@dataclass(frozen=True)
class ComposeResult:
    """Foci of f, g and g following f, plus the interpolation parameter.

    In the juxtaposed layout (f between x = 0 and delta, g between delta
    and 2*delta, the composite across the full width 2*delta) the three
    foci are collinear and, when all affine, satisfy
    (1 - t)*f_focus + t*g_focus = gf_focus exactly.
    """

    f_focus: ProjectivePoint
    g_focus: ProjectivePoint
    gf_focus: ProjectivePoint
    t: Optional[float]


def compose_linear_foci(
    a: float,
    b: float,
    c: float,
    d: float,
    cfg: AxesConfig = AxesConfig(),
    juxtaposed: bool = True,
) -> ComposeResult:
    """Foci of f(x) = a*x + b, g(x) = c*x + d and their composition g(f(x)).

    In the juxtaposed layout (writing D for cfg.delta) the triples are
    f: (D : b : 1-a), g: (D*(2-c) : d : 1-c) and the composite:
    (2*D : b*c + d : 1-a*c); t = (1-c)/(1-a*c), or None when a*c = 1
    (the composite focus lies at infinity).  With juxtaposed False each
    focus is reported in its own single-stage chart instead.
    """
    delta = cfg.delta
    if juxtaposed:
        f_focus = ProjectivePoint(delta, b, 1.0 - a)
        g_focus = ProjectivePoint(delta * (2.0 - c), d, 1.0 - c)
        gf_focus = ProjectivePoint(2.0 * delta, b * c + d, 1.0 - a * c)
    else:
        f_focus = ProjectivePoint(delta, b, 1.0 - a)
        g_focus = ProjectivePoint(delta, d, 1.0 - c)
        gf_focus = ProjectivePoint(delta, b * c + d, 1.0 - a * c)
    t = None if a * c == 1.0 else (1.0 - c) / (1.0 - a * c)
    return ComposeResult(f_focus, g_focus, gf_focus, t)
