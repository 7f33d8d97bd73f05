"""Exact computations for the framed DT and GW A_{n-1} orbifold vertices."""
from .dt_vertex import VertexLegs, frame_dt, framed_vertex, glue_PY, vertex_P
from .partitions import ColoredDiagram, diagram_to_quotient, quotient_to_diagram
from .series import Series
from .weights import EquivWeights

__all__ = ["ColoredDiagram", "EquivWeights", "Series", "VertexLegs", "diagram_to_quotient", "frame_dt",
           "framed_vertex", "glue_PY", "quotient_to_diagram", "vertex_P"]
__version__ = "0.1.0"
