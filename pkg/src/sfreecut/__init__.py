"""Maximal S-free polyhedra and the minimal cut functions they induce, in exact arithmetic."""

__version__ = "0.1.0"

from .cutgen import CutResult, TableauInstance, default_initial_body, generate_cut
from .gauge import (
    GaugeFunction,
    PolarBody,
    body_of,
    dominates,
    gauge_eval,
    is_minimal,
    polar,
    polar_of_polyhedron,
    rho,
)
from .lattice import (
    SDescription,
    SearchBox,
    default_box,
    enumerate_integer_points,
    hull_2d,
    recession_generators_of_S,
    s_contains,
)
from .linalg import rat, solve_linear, vec
from .polyhedron import (
    GeneratorForm,
    HPolyhedron,
    Location,
    double_description,
    facet_rel_interior_test,
    is_bounded,
    membership,
)
from .sfree import (
    MaximalityReport,
    SFreeBody,
    Verdict,
    facet_certificates,
    is_maximal_s_free,
    is_s_free,
    lineality_extend,
    shell,
    tighten_lattice,
    tilt_to_maximal,
)
from .verifier import ValidityReport, verify_validity

__all__ = [
    "__version__",
    "CutResult",
    "TableauInstance",
    "default_initial_body",
    "generate_cut",
    "GaugeFunction",
    "PolarBody",
    "body_of",
    "dominates",
    "gauge_eval",
    "is_minimal",
    "polar",
    "polar_of_polyhedron",
    "rho",
    "SDescription",
    "SearchBox",
    "default_box",
    "enumerate_integer_points",
    "hull_2d",
    "recession_generators_of_S",
    "s_contains",
    "rat",
    "solve_linear",
    "vec",
    "GeneratorForm",
    "HPolyhedron",
    "Location",
    "double_description",
    "facet_rel_interior_test",
    "is_bounded",
    "membership",
    "MaximalityReport",
    "SFreeBody",
    "Verdict",
    "facet_certificates",
    "is_maximal_s_free",
    "is_s_free",
    "lineality_extend",
    "shell",
    "tighten_lattice",
    "tilt_to_maximal",
    "ValidityReport",
    "verify_validity",
]
