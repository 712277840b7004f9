"""Foci of arrow diagrams and the focal curves of differentiable functions.

An arrow diagram of f draws, for every input x, an arrow from (0, x) on a
vertical input axis to (delta, f(x)) on a parallel output axis.  For linear
f the arrow lines meet in one focus; for general f the arrow lines envelope
the focal curve sampled here.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Tuple

from .expr import DomainError, ExprNode, Num, differentiate, evaluate
from .geometry import PlanePoint, ProjectivePoint, projectively_equal

__all__ = [
    "AxesConfig",
    "PlanePoint",
    "ProjectivePoint",
    "FocalSample",
    "LinearParams",
    "linear_params_of",
    "ProbeResult",
    "SingularParameter",
    "InvalidFocus",
    "EmptyRange",
    "linear_focus",
    "focal_point",
    "focal_tangent",
    "derivative_from_focus",
    "dual_point",
    "duality_map",
    "duality_map_inverse",
    "sample_focal_curve",
    "detect_cusps",
    "probe",
    "projectively_equal",
]

_INFINITY_TOL = 1e-9


class SingularParameter(ArithmeticError):
    """The gradient equals one: the focus lies at infinity, no tangent chart."""


class InvalidFocus(ValueError):
    """A focus on the input axis corresponds to no finite derivative reading."""


class EmptyRange(ValueError):
    """Every requested sample failed to evaluate."""


@dataclass(frozen=True)
class AxesConfig:
    """Horizontal separation between the vertical input and output axes."""

    delta: float = 1.0

    def __post_init__(self):
        if not (self.delta > 0):
            raise ValueError("delta must be positive")


@dataclass(frozen=True)
class LinearParams:
    """Gradient and intercept of a linear function a*x + b."""

    a: float
    b: float


def linear_params_of(f: ExprNode) -> Optional[LinearParams]:
    """LinearParams when the second derivative folds to the literal zero, else None."""
    if differentiate(differentiate(f)) != Num(Fraction(0)):
        return None
    try:
        b = evaluate(f, 0.0)
        a = evaluate(differentiate(f), 0.0)
    except DomainError:
        return None
    return LinearParams(a, b)


@dataclass(frozen=True)
class FocalSample:
    """One sampled point of a focal curve.

    affine is None when the focus lies at (or within tolerance of) infinity;
    tangent is None at cusp candidates (second derivative zero or unavailable)
    and at infinite foci.
    """

    t: float
    point: ProjectivePoint
    affine: Optional[PlanePoint]
    tangent: Optional[Tuple[float, float]]
    at_infinity: bool
    near_cusp: bool


@dataclass(frozen=True)
class ProbeResult:
    """Derivative readout at one input: the focus of the local linear approximation."""

    x0: float
    point: ProjectivePoint
    focus: Optional[PlanePoint]
    fprime: float


def linear_focus(p: LinearParams, cfg: AxesConfig = AxesConfig()) -> ProjectivePoint:
    """Common intersection of all arrow lines of the linear map x -> a*x + b.

    The lines through (0, x) and (delta, a*x + b) meet at the projective
    point (delta : b : 1 - a); affine (delta/(1-a), b/(1-a)) when a != 1,
    at infinity in the arrow direction (1 : b : 0) when a = 1.
    """
    return ProjectivePoint(cfg.delta, p.b, 1.0 - p.a)


def focal_point(f: ExprNode, t: float, cfg: AxesConfig = AxesConfig()) -> ProjectivePoint:
    """Focus of the best linear approximation of f at t.

    Equals (delta : f(t) - t*f'(t) : 1 - f'(t)); the affine chart traces the
    focal curve (delta/(1-f'(t)), (f(t) - t*f'(t))/(1-f'(t))).
    DomainError propagates from evaluation.
    """
    v = evaluate(f, t)
    d1 = evaluate(differentiate(f), t)
    return ProjectivePoint(cfg.delta, v - t * d1, 1.0 - d1)


def focal_tangent(f: ExprNode, t: float) -> Optional[Tuple[float, float]]:
    """Velocity of the focal-curve parametrization at t (delta = 1 chart).

    Returns f''(t)/(1-f'(t))^2 * (1, f(t) - t), which is parallel to the
    arrow vector; None when f''(t) = 0 (the curve is stationary there).
    Raises SingularParameter when f'(t) = 1.
    """
    fp = differentiate(f)
    fpp = differentiate(fp)
    v = evaluate(f, t)
    d1 = evaluate(fp, t)
    d2 = evaluate(fpp, t)
    if d1 == 1.0:
        raise SingularParameter(f"gradient is one at t = {t}")
    if d2 == 0.0:
        return None
    k = d2 / (1.0 - d1) ** 2
    return (k, k * (v - t))


def derivative_from_focus(x_coord: float, delta: float = 1.0) -> float:
    """Read f'(x0) back from the horizontal coordinate of the focus.

    Inverts x = delta/(1 - f') to f' = 1 - delta/x.  Raises InvalidFocus
    for x = 0 (focus on the input axis).
    """
    if x_coord == 0:
        raise InvalidFocus("focus lies on the input axis")
    return 1.0 - delta / x_coord


def dual_point(f: ExprNode, t: float) -> ProjectivePoint:
    """Dual coordinates of the tangent line of the graph of f at t.

    The tangent y = f(t) + f'(t)(x - t) corresponds to the point
    (f'(t) : -1 : f(t) - t*f'(t)) in the dual projective plane.
    """
    v = evaluate(f, t)
    d1 = evaluate(differentiate(f), t)
    return ProjectivePoint(d1, -1.0, v - t * d1)


def duality_map(p: ProjectivePoint) -> ProjectivePoint:
    """Projective-linear map (X : Y : Z) -> (Y : -Z : X + Y).

    Carries the dual curve of a graph onto the focal curve of the function.
    """
    return ProjectivePoint(p.y, -p.z, p.x + p.y)


def duality_map_inverse(p: ProjectivePoint) -> ProjectivePoint:
    """Inverse of duality_map: (U : V : W) -> (W - U : U : -V)."""
    return ProjectivePoint(p.z - p.x, p.x, -p.y)


def sample_focal_curve(
    f: ExprNode,
    t_min: float,
    t_max: float,
    n: int,
    cfg: AxesConfig = AxesConfig(),
) -> List[Optional[FocalSample]]:
    """Focal-curve samples at n uniform parameters in [t_min, t_max].

    Positions where evaluation raises DomainError hold None as a gap marker.
    Samples with gradient within 1e-9 of one are flagged at_infinity and
    carry no affine point.  Raises EmptyRange when every sample fails.
    """
    if n < 2:
        raise ValueError("need at least two samples")
    if not (t_min < t_max):
        raise ValueError("empty parameter range")
    fp = differentiate(f)
    fpp = differentiate(fp)
    out: List[Optional[FocalSample]] = []
    produced = 0
    for i in range(n):
        t = t_min + (t_max - t_min) * i / (n - 1)
        try:
            v = evaluate(f, t)
            d1 = evaluate(fp, t)
        except DomainError:
            out.append(None)
            continue
        point = ProjectivePoint(cfg.delta, v - t * d1, 1.0 - d1)
        at_infinity = abs(d1 - 1.0) <= _INFINITY_TOL
        affine = None if at_infinity else point.affine()
        try:
            d2 = evaluate(fpp, t)
        except DomainError:
            d2 = None
        near_cusp = d2 is not None and d2 == 0.0
        tangent = None
        if d2 is not None and d2 != 0.0 and not at_infinity:
            k = d2 / (1.0 - d1) ** 2
            tangent = (cfg.delta * k, k * (v - t))
        out.append(FocalSample(t, point, affine, tangent, at_infinity, near_cusp))
        produced += 1
    if produced == 0:
        raise EmptyRange("no sample of the range is in the domain of f")
    return out


def detect_cusps(
    f: ExprNode,
    t_min: float,
    t_max: float,
    grid: int = 1024,
) -> List[Tuple[float, PlanePoint]]:
    """Cusps of the focal curve: sign changes of f'' located by bisection.

    Scans a uniform grid, brackets each sign change, bisects to
    |t_hi - t_lo| <= 1e-10, and pairs the parameter with the affine focal
    point there (delta = 1).  Grid zeros count only when the neighbors have
    opposite signs; sign-preserving touches are excluded, as are cusps whose
    focus lies at infinity.
    """
    if not (t_min < t_max):
        raise ValueError("empty parameter range")
    fp = differentiate(f)
    fpp = differentiate(fp)

    def d2(t: float) -> Optional[float]:
        try:
            return evaluate(fpp, t)
        except DomainError:
            return None

    ts = [t_min + (t_max - t_min) * i / grid for i in range(grid + 1)]
    vals = [d2(t) for t in ts]
    roots: List[float] = []
    for i in range(grid):
        va, vb = vals[i], vals[i + 1]
        if va is None or vb is None:
            continue
        if va == 0.0:
            if 0 < i and vals[i - 1] is not None and vals[i - 1] * vb < 0:
                roots.append(ts[i])
            continue
        if va * vb < 0:
            lo, hi, flo = ts[i], ts[i + 1], va
            while hi - lo > 1e-10:
                mid = 0.5 * (lo + hi)
                vm = d2(mid)
                if vm is None:
                    break
                if vm == 0.0:
                    lo = hi = mid
                    break
                if flo * vm < 0:
                    hi = mid
                else:
                    lo, flo = mid, vm
            roots.append(0.5 * (lo + hi))
    out: List[Tuple[float, PlanePoint]] = []
    for t in roots:
        try:
            v = evaluate(f, t)
            d1 = evaluate(fp, t)
        except DomainError:
            continue
        if abs(d1 - 1.0) <= _INFINITY_TOL:
            continue
        out.append((t, PlanePoint(1.0 / (1.0 - d1), (v - t * d1) / (1.0 - d1))))
    return out


def probe(f: ExprNode, x0: float, cfg: AxesConfig = AxesConfig()) -> ProbeResult:
    """Focus of the local linear approximation at x0 together with f'(x0).

    The focus is None when the gradient is within 1e-9 of one.
    DomainError propagates from evaluation.
    """
    p = focal_point(f, x0, cfg)
    d1 = evaluate(differentiate(f), x0)
    focus = None if abs(d1 - 1.0) <= _INFINITY_TOL else p.affine()
    return ProbeResult(x0, p, focus, d1)
