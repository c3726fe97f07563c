"""Plane geometry kernel: Euclidean constructions, inversion and Moebius
maps on the extended plane, the sphere, and the two disk models of the
hyperbolic plane, plus a small script runner (``geo``) on top.
"""

from .core_numerics import (
    DEFAULT_TOLERANCES,
    GeometryError,
    Tolerances,
    normalize_angle,
    plane_metric,
)
from .euclid_plane import (
    Circle,
    Line,
    Triangle,
    bisector_foot,
    centroid,
    circle_circle_intersection,
    circumcenter,
    dist,
    foot_point,
    incenter,
    intersect_lines,
    line_circle_intersection,
    line_through,
    midpoint,
    orthocenter,
    perpendicular_bisector,
    reflect_line,
    same_side,
    signed_angle,
    tangency_classify,
)
from .inversive import (
    INF,
    Cline,
    ExtPoint,
    cline_through,
    clines_perpendicular,
    inscribed_check,
    invert_cline,
    invert_point,
    is_inf,
    perpendicular_cline_through,
    ptolemy_residual,
    real_cross_ratio,
)
from .klein import bolyai_construct, bolyai_steps, klein_dist, klein_to_poincare, poincare_to_klein
from .moebius import (
    Elementary,
    Moebius,
    apply_chain,
    complex_cross_ratio,
    decompose_elementary,
    from_three_points,
    projectively_equal,
)
from .poincare import (
    ABSOLUTE,
    HCircle,
    HLine,
    angle_of_parallelism,
    classify_cycle,
    conformal_factor,
    h_angle,
    h_circle_realize,
    h_circumference,
    h_defect,
    h_dist,
    h_foot,
    h_line_through,
    h_midpoint,
    h_perpendicular_at,
    h_perpendicular_through,
    h_point_toward,
    h_reflect,
    move_point,
    move_to_center,
    parallelism_distance,
)
from .spherical import (
    central_project,
    great_circle_image,
    s_angle,
    s_dist,
    s_excess,
    s_pythagoras_residual,
    stereographic_to_plane,
    stereographic_to_sphere,
)

__all__ = [
    "ABSOLUTE",
    "DEFAULT_TOLERANCES",
    "INF",
    "Circle",
    "Cline",
    "Elementary",
    "ExtPoint",
    "GeometryError",
    "HCircle",
    "HLine",
    "Line",
    "Moebius",
    "Tolerances",
    "Triangle",
    "angle_of_parallelism",
    "apply_chain",
    "bisector_foot",
    "bolyai_construct",
    "bolyai_steps",
    "central_project",
    "centroid",
    "circle_circle_intersection",
    "circumcenter",
    "classify_cycle",
    "cline_through",
    "clines_perpendicular",
    "complex_cross_ratio",
    "conformal_factor",
    "decompose_elementary",
    "dist",
    "foot_point",
    "from_three_points",
    "great_circle_image",
    "h_angle",
    "h_circle_realize",
    "h_circumference",
    "h_defect",
    "h_dist",
    "h_foot",
    "h_line_through",
    "h_midpoint",
    "h_perpendicular_at",
    "h_perpendicular_through",
    "h_point_toward",
    "h_reflect",
    "incenter",
    "inscribed_check",
    "intersect_lines",
    "invert_cline",
    "invert_point",
    "is_inf",
    "klein_dist",
    "klein_to_poincare",
    "line_circle_intersection",
    "line_through",
    "midpoint",
    "move_point",
    "move_to_center",
    "normalize_angle",
    "orthocenter",
    "parallelism_distance",
    "perpendicular_bisector",
    "perpendicular_cline_through",
    "plane_metric",
    "poincare_to_klein",
    "projectively_equal",
    "ptolemy_residual",
    "real_cross_ratio",
    "reflect_line",
    "s_angle",
    "s_dist",
    "s_excess",
    "s_pythagoras_residual",
    "same_side",
    "signed_angle",
    "stereographic_to_plane",
    "stereographic_to_sphere",
    "tangency_classify",
]
