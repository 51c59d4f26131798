"""Geometry kernel: frames, profiles, implicit solids, sampling, meshes."""

from .build import build_solid, denormalize_angles
from .curves import (
    ArcCurve,
    CircleCurve,
    Curve,
    LineSegment,
    Loop,
    arc_geometry,
    arc_points,
    tessellate_curve,
    tessellate_loop,
)
from .frame import Frame, sketch_plane_frame
from .mesh import (
    TriangleMesh,
    edge_use_counts,
    euler_characteristic,
    export_mesh,
    is_closed,
    merge_meshes,
    mesh_body,
    triangulate_profile,
    weld_vertices,
    write_obj,
    write_stl,
)
from .profile import Profile, TessellatedProfile, point_in_profile, signed_area
from .sampling import PointCloud, normalize_points, sample_surface
from .solid import ExtrusionBody, SolidModel, body_occupancy, model_occupancy

__all__ = [
    "build_solid", "denormalize_angles",
    "ArcCurve", "CircleCurve", "Curve", "LineSegment", "Loop",
    "arc_geometry", "arc_points", "tessellate_curve", "tessellate_loop",
    "Frame", "sketch_plane_frame",
    "TriangleMesh", "edge_use_counts", "euler_characteristic", "export_mesh",
    "is_closed", "merge_meshes", "mesh_body", "triangulate_profile",
    "weld_vertices", "write_obj", "write_stl",
    "Profile", "TessellatedProfile", "point_in_profile", "signed_area",
    "PointCloud", "normalize_points", "sample_surface",
    "ExtrusionBody", "SolidModel", "body_occupancy", "model_occupancy",
]
