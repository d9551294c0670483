"""1-plane drawings: validation, edge merging, quasi-optimality and exact crossing numbers."""

from .bounds import crossing_upper_bound_report, has_dominating_vertex, pro1_window
from .construct import (
    MergeSpec,
    chain,
    decompose,
    edge_merge,
    from_quadrangulation,
    gen_k2222,
    gen_odd_pair,
    gen_pdw_optimal,
    is_optimal,
    is_quasi_optimal,
    pseudo_double_wheel,
    recompose,
)
from .drawing import (
    OnePlaneDrawing,
    addable_edges,
    crossing_count,
    face_census,
    is_maximal,
    lemma_c_rhs,
    odd_face_count,
    problem1_bound,
    underlying_graph,
    validate,
)
from .embed import RotationSystem, faces, is_planar
from .errors import OnePlanarError
from .graph import SimpleGraph, connectivity
from .io import format_drawing, parse_drawing, read_drawing, write_drawing
from .oracle import crossing_number, is_one_planar, seven_vertex_census

__version__ = "0.1.0"

__all__ = [
    "crossing_upper_bound_report",
    "has_dominating_vertex",
    "pro1_window",
    "MergeSpec",
    "chain",
    "decompose",
    "edge_merge",
    "from_quadrangulation",
    "gen_k2222",
    "gen_odd_pair",
    "gen_pdw_optimal",
    "is_optimal",
    "is_quasi_optimal",
    "pseudo_double_wheel",
    "recompose",
    "OnePlaneDrawing",
    "addable_edges",
    "crossing_count",
    "face_census",
    "is_maximal",
    "lemma_c_rhs",
    "odd_face_count",
    "problem1_bound",
    "underlying_graph",
    "validate",
    "RotationSystem",
    "faces",
    "is_planar",
    "OnePlanarError",
    "SimpleGraph",
    "connectivity",
    "format_drawing",
    "parse_drawing",
    "read_drawing",
    "write_drawing",
    "crossing_number",
    "is_one_planar",
    "seven_vertex_census",
]
