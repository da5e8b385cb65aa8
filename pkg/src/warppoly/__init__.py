"""Warping degree labelings, warping polynomials, and spans of oriented
knot diagrams given as Gauss codes."""

from .characterize import (
    CharForm,
    Rejection,
    encode_form,
    one_bridge_diagram,
    one_bridge_polynomial,
    recognize,
    witness,
)
from .diagram import OVER, UNDER, GaussDiagram, Pass, validate
from .laurent import WarpPoly
from .moves import (
    connected_sum,
    find_edge_with_label,
    insert_kink_over_first,
    insert_kink_under_first,
)
from .notation import (
    BraidWord,
    braid_closure,
    canonicalize,
    format_gauss,
    format_poly,
    parse_braid,
    parse_gauss,
    parse_poly,
)
from .search import (
    PropertyReport,
    Violation,
    almost_alternating_scan,
    dealternating_number,
    enumerate_diagrams,
    run_property_suite,
    span_witness,
)
from .warping import (
    degree_at_base,
    diagram_span,
    fg_decomposition,
    is_monotone,
    labeling,
    max_degree,
    predict_crossing_change,
    warping_degree,
    warping_polynomial,
)

__version__ = "0.1.0"

__all__ = [
    "BraidWord",
    "CharForm",
    "GaussDiagram",
    "OVER",
    "Pass",
    "PropertyReport",
    "Rejection",
    "UNDER",
    "Violation",
    "WarpPoly",
    "almost_alternating_scan",
    "braid_closure",
    "canonicalize",
    "connected_sum",
    "dealternating_number",
    "degree_at_base",
    "diagram_span",
    "encode_form",
    "enumerate_diagrams",
    "fg_decomposition",
    "find_edge_with_label",
    "format_gauss",
    "format_poly",
    "insert_kink_over_first",
    "insert_kink_under_first",
    "is_monotone",
    "labeling",
    "max_degree",
    "one_bridge_diagram",
    "one_bridge_polynomial",
    "parse_braid",
    "parse_gauss",
    "parse_poly",
    "predict_crossing_change",
    "recognize",
    "run_property_suite",
    "span_witness",
    "validate",
    "warping_degree",
    "warping_polynomial",
    "witness",
]
