"""Curves and arcs on punctured surfaces, stored as edge weights on an
ideal triangulation."""
from .cut import Cut, CutError, Subsurface, cut
from .generate import basic_curves, edge_arcs, random_arc, random_curve
from .intersection import (crossings, cuts, dehn_twist, intersection_number,
                           misses, path_intersection, twist_path)
from .lamination import (Lamination, LaminationError, from_components,
                         from_path, parse_lamination, serialize_lamination)
from .moves import (MappingClass, apply, flip_laminations, flip_path,
                    tropical_flip_weight)
from .neighborhood import (FilledSubsurface, arc_boundary_curves,
                           boundary_neighborhood, components, face_curves,
                           filled_subsurface, fills, is_essential)
from .paths import Arc, Curve
from .triangulation import IdealTriangulation, SurfaceError, flip, new_surface, rot

__all__ = [
    "Arc", "Curve", "Cut", "CutError", "FilledSubsurface", "IdealTriangulation",
    "Lamination", "LaminationError", "MappingClass", "Subsurface", "SurfaceError",
    "apply", "arc_boundary_curves", "basic_curves", "boundary_neighborhood",
    "components", "crossings", "cut", "cuts", "dehn_twist", "edge_arcs",
    "face_curves", "filled_subsurface", "fills", "flip", "flip_laminations",
    "flip_path", "from_components", "from_path", "intersection_number",
    "is_essential", "misses", "new_surface", "parse_lamination",
    "path_intersection", "random_arc", "random_curve", "rot",
    "serialize_lamination", "tropical_flip_weight", "twist_path",
]
