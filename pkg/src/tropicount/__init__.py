"""Exact Welschinger invariants of toric Del Pezzo surfaces via lattice paths."""
from .lattice import DivisorSpec, InvalidDivisor, LatticePolygon, polygon_for, rectangle
from .paths import AdmissiblePath, IndexSet, Infeasible, enumerate_paths
from .compress import Subdivision
from .invariants import (InvariantResult, conjecture_report, subdivisions, welschinger,
                         welschinger_all_I, welschinger_table)
from .oracles import closed_forms, gw_bounds, kontsevich_N
from .example_w2d import w2d_top

__version__ = "0.1.0"

__all__ = [
    "AdmissiblePath", "DivisorSpec", "IndexSet", "Infeasible", "InvalidDivisor", "InvariantResult",
    "LatticePolygon", "Subdivision", "closed_forms", "conjecture_report", "enumerate_paths",
    "gw_bounds", "kontsevich_N", "polygon_for", "rectangle", "subdivisions", "w2d_top",
    "welschinger", "welschinger_all_I", "welschinger_table",
]
