"""planecensus: plane graphs as rotation systems, their degree/gonality
census, exact Euler-type relation checking and class recognition."""

from .census import (
    Census,
    GonalityHistogram,
    IdentityVerdict,
    classify_vertices,
    degree_census,
    gonality_histogram,
    verify_counting_identities,
)
from .classes import ClassReport, ScanResult, classify, gamma2_linear_scan, scan_inputs
from .embedding import (
    Dart,
    EmbeddedGraph,
    FaceSet,
    PlaneGraph,
    build_embedding,
    check_two_connected,
    compute_genus,
    designate_outer_face,
    enumerate_faces,
    plane_graph_from_rotations,
)
from .fileformat import parse_embedding, serialize_embedding
from .generators import (
    FUZZ_FAMILIES,
    OPPOSITE_FIRST,
    OPPOSITE_SECOND,
    FuzzConfig,
    enumerate_small,
    fuzz,
    gen_grid,
    gen_polygon,
    gen_prism,
    gen_wheel,
    quad_split,
    stellar_subdivide,
)
from .relations import (
    CATALOG,
    RelationReport,
    check_face_system,
    evaluate_catalog,
    predict_f3,
    residual_d4_general,
    residual_gamma2,
    residual_master,
)
from .report import Report, build_report, serialize_report

__version__ = "0.1.0"

__all__ = [
    "Census",
    "GonalityHistogram",
    "IdentityVerdict",
    "classify_vertices",
    "degree_census",
    "gonality_histogram",
    "verify_counting_identities",
    "ClassReport",
    "ScanResult",
    "classify",
    "gamma2_linear_scan",
    "scan_inputs",
    "Dart",
    "EmbeddedGraph",
    "FaceSet",
    "PlaneGraph",
    "build_embedding",
    "check_two_connected",
    "compute_genus",
    "designate_outer_face",
    "enumerate_faces",
    "plane_graph_from_rotations",
    "parse_embedding",
    "serialize_embedding",
    "FUZZ_FAMILIES",
    "OPPOSITE_FIRST",
    "OPPOSITE_SECOND",
    "FuzzConfig",
    "enumerate_small",
    "fuzz",
    "gen_grid",
    "gen_polygon",
    "gen_prism",
    "gen_wheel",
    "quad_split",
    "stellar_subdivide",
    "CATALOG",
    "RelationReport",
    "check_face_system",
    "evaluate_catalog",
    "predict_f3",
    "residual_d4_general",
    "residual_gamma2",
    "residual_master",
    "Report",
    "build_report",
    "serialize_report",
]
