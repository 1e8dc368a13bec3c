"""Exact combinatorics and algebra of convex polytopes simple in edges."""
from .errors import PolytopeError
from .geometry import CombPolytope, Polytope
from .lattice import FaceLattice, face_lattice, h_from_f, f_from_h, simplicity_class

__all__ = [
    "CombPolytope",
    "FaceLattice",
    "Polytope",
    "PolytopeError",
    "f_from_h",
    "face_lattice",
    "h_from_f",
    "simplicity_class",
]
__version__ = "0.1.0"
