"""Arrow graphs of real functions and their focal curves.

An arrow graph draws each input-output pair of a function as an arrow
between two parallel vertical axes.  For a linear function all arrow lines
meet in a single focus; in general they envelope a focal curve.  This
package parses functions, computes foci, focal samples, tangents, duals,
exact implicit equations of focal curves of rational functions, the conic
family of quadratic-over-linear functions, transformation laws, linear
composition foci, and renders everything to SVG/JSON, with a CLI and a
small HTTP JSON API on top.
"""

from .algebra import (
    ConicClass,
    DegenerateFamily,
    DegenerateParametrization,
    NotAConic,
    Poly1,
    Poly2,
    Rational,
    RationalFunction,
    classify_conic,
    conic_from_family,
    expected_degree,
    focal_triple,
    implicitize,
    vertical_axis_meet,
)
from .expr import (
    DomainError,
    ExprNode,
    FunctionDef,
    FunctionTable,
    NotRational,
    NOT_RATIONAL,
    ParseError,
    differentiate,
    evaluate,
    parse,
    simplify,
    substitute,
    to_rational_function,
    to_string,
)
from .focal import (
    AxesConfig,
    EmptyRange,
    FocalSample,
    InvalidFocus,
    LinearParams,
    PlanePoint,
    ProbeResult,
    ProjectivePoint,
    SingularParameter,
    derivative_from_focus,
    detect_cusps,
    dual_point,
    duality_map,
    duality_map_inverse,
    focal_point,
    focal_tangent,
    linear_focus,
    probe,
    projectively_equal,
    sample_focal_curve,
)
from .render import (
    RenderConfig,
    Scene,
    Viewport,
    build_scene,
    scene_from_json,
    scene_to_json,
    scene_to_svg,
)
from .transforms import (
    AddConstant,
    ComposeResult,
    DegenerateResult,
    PlaneMap,
    ScaleInput,
    ScaleOutput,
    ShiftInput,
    TransformKind,
    apply_to_function,
    compose_linear_foci,
    shear_for_period,
    substitution_map,
    transform_implicit,
)

__version__ = "0.1.0"
