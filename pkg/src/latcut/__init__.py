"""Exact rational toolkit for lattice-free bodies and intersection cuts."""

from .constructions import (
    ApproxResult,
    FacetSubsetResult,
    PyramidWitness,
    TowerWitness,
    TruncatedCone,
    approximate_any_f,
    approximate_fixed_f,
    caratheodory_facet_subset,
    cube_face_construction,
    cylinder_lift_witness,
    inapprox_pyramid,
    lift_to_nplus1,
    segment_meets,
    shrink_epsilon,
    simplex_tower,
    truncated_cone_shrink,
)
from .cuts import (
    ClosureSystem,
    CutSystem,
    GaugeConvergenceReport,
    PolarDistance,
    closure,
    cut_dominates,
    cut_point_member,
    f_metric,
    gauge,
    gauge_convergence_check,
    intersection_cut,
)
from .errors import (
    DimensionMismatch,
    EmptySet,
    HypothesisViolated,
    LatcutError,
    MuTooSmall,
    NotFullDimensional,
    NotLatticeFreeInput,
    NotPolytope,
    NotSeparable,
    OriginNotInterior,
    OutOfRange,
    ParseError,
    PointNotInterior,
    UnboundedEnumeration,
    UnknownScenario,
    UnsupportedDimension,
    UnsupportedShape,
    WholeSpace,
    WitnessOnBoundary,
)
from .geometry import (
    HalfSpace,
    Polyhedron,
    UnimodularMap,
    affine_image,
    hausdorff_sq,
    homothety,
    lp_solve,
    minkowski_scale_shift,
    polar,
    separate,
    transform,
    translate,
)
from .jsonio import (
    emit_cut_system,
    emit_polyhedron,
    emit_strength_report,
    parse_cut_system,
    parse_polyhedron,
    parse_strength_report,
)
from .lattice import (
    LatticeFreeCert,
    WidthReport,
    certify_lattice_free,
    flatness_bound,
    grow_to_maximal,
    interior_lattice_point,
    lattice_points_in,
    lattice_width,
    point_denominator,
)
from .scenarios import ScenarioReport, list_scenarios, run_scenario
from .strength import (
    SandwichReport,
    StrengthReport,
    find_covering_body,
    inner_approximation,
    relative_strength,
    sandwich,
)

__version__ = "0.1.0"

__all__ = [
    "HalfSpace",
    "Polyhedron",
    "UnimodularMap",
    "affine_image",
    "hausdorff_sq",
    "homothety",
    "lp_solve",
    "minkowski_scale_shift",
    "polar",
    "separate",
    "transform",
    "translate",
    "LatticeFreeCert",
    "WidthReport",
    "certify_lattice_free",
    "flatness_bound",
    "grow_to_maximal",
    "interior_lattice_point",
    "lattice_points_in",
    "lattice_width",
    "point_denominator",
    "CutSystem",
    "ClosureSystem",
    "GaugeConvergenceReport",
    "PolarDistance",
    "closure",
    "cut_dominates",
    "cut_point_member",
    "f_metric",
    "gauge",
    "gauge_convergence_check",
    "intersection_cut",
    "StrengthReport",
    "SandwichReport",
    "relative_strength",
    "sandwich",
    "inner_approximation",
    "find_covering_body",
    "ApproxResult",
    "FacetSubsetResult",
    "PyramidWitness",
    "TowerWitness",
    "TruncatedCone",
    "approximate_any_f",
    "approximate_fixed_f",
    "caratheodory_facet_subset",
    "cube_face_construction",
    "cylinder_lift_witness",
    "inapprox_pyramid",
    "lift_to_nplus1",
    "segment_meets",
    "shrink_epsilon",
    "simplex_tower",
    "truncated_cone_shrink",
    "emit_polyhedron",
    "parse_polyhedron",
    "emit_cut_system",
    "parse_cut_system",
    "emit_strength_report",
    "parse_strength_report",
    "ScenarioReport",
    "run_scenario",
    "list_scenarios",
    "LatcutError",
    "DimensionMismatch",
    "EmptySet",
    "WholeSpace",
    "OriginNotInterior",
    "PointNotInterior",
    "NotSeparable",
    "NotFullDimensional",
    "UnsupportedShape",
    "UnsupportedDimension",
    "UnboundedEnumeration",
    "NotPolytope",
    "MuTooSmall",
    "WitnessOnBoundary",
    "HypothesisViolated",
    "NotLatticeFreeInput",
    "OutOfRange",
    "ParseError",
    "UnknownScenario",
    "__version__",
]
