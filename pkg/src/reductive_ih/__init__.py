"""Intersection cohomology Betti numbers of projective reductive and toric varieties."""

from .qpoly import QPolynomial, QSeries, classifying_series
from .rootdatum import RootDatum, WeylGroup, generate_weyl, preset, torus, gl, cartan_type, product
from .polyhedra import RationalPolytope, polytope_from_vertices
from .admissibility import admissible_faces, face_symmetry, is_admissible
from .engine import (IHEngine, IHResult, VarietyDescriptor, equivariant_series, global_ih,
                     local_stalk, orbit_table, variety_dim)
from .toric_oracle import toric_ih_oracle

__all__ = [
    "QPolynomial", "QSeries", "classifying_series",
    "RootDatum", "WeylGroup", "generate_weyl", "preset", "torus", "gl", "cartan_type", "product",
    "RationalPolytope", "polytope_from_vertices",
    "admissible_faces", "face_symmetry", "is_admissible",
    "IHEngine", "IHResult", "VarietyDescriptor", "equivariant_series", "global_ih", "local_stalk",
    "orbit_table", "variety_dim",
    "toric_ih_oracle",
]
