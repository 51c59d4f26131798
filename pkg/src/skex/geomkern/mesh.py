"""Visualization-grade triangle meshes for extrusion bodies.

Each body is tessellated watertight on its own: caps are ear-clipped (holes
are bridged into their outer loop first) and side walls are quad strips
split into triangles. Bodies are concatenated WITHOUT boolean trimming;
consumers are the rasterizer and OBJ/STL export, not exact geometry.
"""

from __future__ import annotations

import struct
from dataclasses import dataclass

import numpy as np

from ..errors import TessellationError
from .profile import TessellatedProfile
from .solid import SolidModel

_AREA_EPS = 1e-14


@dataclass(frozen=True)
class TriangleMesh:
    vertices: np.ndarray  # (V, 3) float64
    faces: np.ndarray     # (F, 3) int32

    def __post_init__(self) -> None:
        v = np.ascontiguousarray(self.vertices, dtype=np.float64)
        f = np.ascontiguousarray(self.faces, dtype=np.int32)
        v.flags.writeable = False
        f.flags.writeable = False
        object.__setattr__(self, "vertices", v)
        object.__setattr__(self, "faces", f)

    @property
    def n_faces(self) -> int:
        return int(self.faces.shape[0])

    def face_normals(self) -> np.ndarray:
        a = self.vertices[self.faces[:, 0]]
        b = self.vertices[self.faces[:, 1]]
        c = self.vertices[self.faces[:, 2]]
        n = np.cross(b - a, c - a)
        norms = np.linalg.norm(n, axis=1, keepdims=True)
        return n / np.maximum(norms, 1e-300)

    def surface_area(self) -> float:
        a = self.vertices[self.faces[:, 0]]
        b = self.vertices[self.faces[:, 1]]
        c = self.vertices[self.faces[:, 2]]
        return float(0.5 * np.linalg.norm(np.cross(b - a, c - a), axis=1).sum())


def merge_meshes(meshes: list[TriangleMesh]) -> TriangleMesh:
    verts, faces, off = [], [], 0
    for m in meshes:
        verts.append(m.vertices)
        faces.append(m.faces + off)
        off += m.vertices.shape[0]
    return TriangleMesh(np.concatenate(verts, axis=0),
                        np.concatenate(faces, axis=0))


# --------------------------------------------------------------------------
# 2D triangulation: ear clipping with hole bridging
# --------------------------------------------------------------------------

def _cross2(o, a, b) -> float:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def _point_in_triangle(p, a, b, c, eps: float) -> bool:
    d1 = _cross2(a, b, p)
    d2 = _cross2(b, c, p)
    d3 = _cross2(c, a, p)
    has_neg = (d1 < -eps) or (d2 < -eps) or (d3 < -eps)
    has_pos = (d1 > eps) or (d2 > eps) or (d3 > eps)
    return not (has_neg and has_pos)


def _check_simple(polylines: list[np.ndarray]) -> None:
    """Reject profiles whose loop edges properly intersect each other."""
    a_all, b_all, loop_id, edge_id = [], [], [], []
    for li, poly in enumerate(polylines):
        m = poly.shape[0] - 1
        a_all.append(poly[:-1])
        b_all.append(poly[1:])
        loop_id.append(np.full(m, li))
        edge_id.append(np.arange(m))
    a = np.concatenate(a_all)
    b = np.concatenate(b_all)
    lid = np.concatenate(loop_id)
    eid = np.concatenate(edge_id)
    loop_sizes = {li: p.shape[0] - 1 for li, p in enumerate(polylines)}
    n = a.shape[0]
    if n > 2000:  # keep the quadratic check bounded
        raise TessellationError("profile too dense for intersection check")
    i, j = np.triu_indices(n, k=1)
    same_loop = lid[i] == lid[j]
    sizes = np.array([loop_sizes[li] for li in lid])
    gap = np.abs(eid[i] - eid[j])
    adjacent = same_loop & ((gap <= 1) | (gap >= sizes[i] - 1))
    i, j = i[~adjacent], j[~adjacent]
    if i.size == 0:
        return
    p, r = a[i], b[i] - a[i]
    q, s = a[j], b[j] - a[j]
    denom = r[:, 0] * s[:, 1] - r[:, 1] * s[:, 0]
    qp = q - p
    t_num = qp[:, 0] * s[:, 1] - qp[:, 1] * s[:, 0]
    u_num = qp[:, 0] * r[:, 1] - qp[:, 1] * r[:, 0]
    with np.errstate(divide="ignore", invalid="ignore"):
        t = t_num / denom
        u = u_num / denom
    eps = 1e-12
    proper = (np.abs(denom) > eps) & (t > eps) & (t < 1 - eps) \
        & (u > eps) & (u < 1 - eps)
    if proper.any():
        raise TessellationError("profile polylines self-intersect")


def _bridge_hole(outer: list[tuple[float, float, int]],
                 hole: list[tuple[float, float, int]]) -> list[tuple[float, float, int]]:
    """Splice a clockwise hole into a counter-clockwise outer polygon.

    Classic visibility construction: shoot a +x ray from the hole vertex
    with maximum x, find the nearest outer edge it crosses, then connect to
    a visible outer vertex (checking reflex vertices inside the candidate
    triangle).
    """
    mi = max(range(len(hole)), key=lambda k: hole[k][0])
    mx, my = hole[mi][0], hole[mi][1]

    best_t = np.inf
    best_edge = -1
    best_ix = 0.0
    n = len(outer)
    for k in range(n):
        x1, y1, _ = outer[k]
        x2, y2, _ = outer[(k + 1) % n]
        if (y1 > my) == (y2 > my):
            continue
        t = (my - y1) / (y2 - y1)
        ix = x1 + t * (x2 - x1)
        if ix >= mx - 1e-12 and ix - mx < best_t:
            best_t = ix - mx
            best_edge = k
            best_ix = ix
    if best_edge < 0:
        raise TessellationError("hole lies outside its outer loop")

    k1, k2 = best_edge, (best_edge + 1) % n
    # Candidate: endpoint of the crossed edge with the larger x.
    cand = k1 if outer[k1][0] > outer[k2][0] else k2
    ix_pt = (best_ix, my)
    m_pt = (mx, my)

    # A reflex outer vertex inside triangle (M, I, candidate) blocks the
    # bridge; connect to the blocker closest in angle to the ray instead.
    best = cand
    best_key = None
    c_pt = (outer[cand][0], outer[cand][1])
    for k in range(n):
        if k == cand:
            continue
        prev = outer[(k - 1) % n]
        cur = outer[k]
        nxt = outer[(k + 1) % n]
        if _cross2(prev, cur, nxt) >= 0:
            continue  # convex vertex cannot block
        p = (cur[0], cur[1])
        if not _point_in_triangle(p, m_pt, ix_pt, c_pt, 1e-12):
            continue
        dx, dy = p[0] - mx, p[1] - my
        key = (abs(np.arctan2(dy, max(dx, 1e-300))), dx * dx + dy * dy)
        if best_key is None or key < best_key:
            best_key = key
            best = k

    # Splice: outer[..best] + hole[mi..] + hole[..mi] + [hole[mi], outer[best]] ...
    merged = outer[:best + 1]
    merged += hole[mi:] + hole[:mi + 1]
    merged += outer[best:]
    return merged


def _ear_clip(poly: list[tuple[float, float, int]]) -> list[tuple[int, int, int]]:
    """Triangulate a counter-clockwise simple polygon; returns tag triples."""
    verts = list(poly)
    tris: list[tuple[int, int, int]] = []
    guard = 0
    while len(verts) > 3:
        n = len(verts)
        clipped = False
        for k in range(n):
            a, b, c = verts[(k - 1) % n], verts[k], verts[(k + 1) % n]
            if _cross2(a, b, c) < -_AREA_EPS:
                continue  # reflex corner
            blocked = False
            for other in verts:
                if other is a or other is b or other is c:
                    continue
                if _point_in_triangle((other[0], other[1]), a, b, c, -1e-12):
                    blocked = True
                    break
            if blocked:
                continue
            tris.append((a[2], b[2], c[2]))
            del verts[k]
            clipped = True
            break
        guard += 1
        if not clipped or guard > 100_000:
            raise TessellationError(
                "ear clipping failed (self-intersecting profile?)")
    a, b, c = verts
    tris.append((a[2], b[2], c[2]))
    return tris


def triangulate_profile(tess: TessellatedProfile) -> list[tuple[int, int, int]]:
    """Triangles over ring-vertex tags for a tessellated profile.

    Tags address the flattened ring vertices: tag = ring_offset[loop] + k
    where k indexes polyline[:-1]. Holes are bridged into their outer loop
    before ear clipping, so bridge edges appear twice and the cap stays
    edge-paired with the side walls.
    """
    _check_simple(tess.polylines)
    offsets = []
    off = 0
    for poly in tess.polylines:
        offsets.append(off)
        off += poly.shape[0] - 1

    triangles: list[tuple[int, int, int]] = []
    for outer_idx, hole_idxs in tess.groups:
        opoly = tess.polylines[outer_idx]
        outer = [(float(p[0]), float(p[1]), offsets[outer_idx] + k)
                 for k, p in enumerate(opoly[:-1])]
        # Bridge holes right-to-left so earlier bridges cannot block later ones.
        holes = sorted(hole_idxs,
                       key=lambda hi: -float(tess.polylines[hi][:-1, 0].max()))
        for hi in holes:
            hpoly = tess.polylines[hi]
            hole = [(float(p[0]), float(p[1]), offsets[hi] + k)
                    for k, p in enumerate(hpoly[:-1])]
            outer = _bridge_hole(outer, hole)
        triangles.extend(_ear_clip(outer))
    return triangles


# --------------------------------------------------------------------------
# Body and model meshing
# --------------------------------------------------------------------------

def mesh_body(body, sagitta_tol: float = 1e-3) -> TriangleMesh:
    tess = body.profile.tessellated(sagitta_tol)
    w0, w1 = body.w_interval()

    ring_uv = np.concatenate([p[:-1] for p in tess.polylines], axis=0)
    m = ring_uv.shape[0]
    bottom = body.frame.to_world(ring_uv, w0)
    top = body.frame.to_world(ring_uv, w1)
    vertices = np.concatenate([bottom, top], axis=0)  # bottom: 0..m-1, top: m..2m-1

    faces: list[tuple[int, int, int]] = []

    # Side walls. Loops are canonically oriented (outers ccw, holes cw), so
    # winding (b_k, b_k1, t_k1) points outward in both cases.
    off = 0
    for poly in tess.polylines:
        cnt = poly.shape[0] - 1
        for k in range(cnt):
            b0 = off + k
            b1 = off + (k + 1) % cnt
            t0, t1 = b0 + m, b1 + m
            faces.append((b0, b1, t1))
            faces.append((b0, t1, t0))
        off += cnt

    # Caps. 2D triangles are ccw; at w1 that faces +n, at w0 we flip.
    cap = triangulate_profile(tess)
    for a, b, c in cap:
        faces.append((a + m, b + m, c + m))
        faces.append((a, c, b))

    return TriangleMesh(vertices, np.asarray(faces, dtype=np.int32))


def export_mesh(model: SolidModel, sagitta_tol: float = 1e-3) -> TriangleMesh:
    """Untrimmed per-body tessellation of the whole model."""
    return merge_meshes([mesh_body(b, sagitta_tol) for b in model.bodies])


# --------------------------------------------------------------------------
# Mesh checks and file export
# --------------------------------------------------------------------------

def edge_use_counts(mesh: TriangleMesh) -> dict[tuple[int, int], int]:
    counts: dict[tuple[int, int], int] = {}
    for a, b, c in mesh.faces:
        for u, v in ((a, b), (b, c), (c, a)):
            key = (int(u), int(v)) if u < v else (int(v), int(u))
            counts[key] = counts.get(key, 0) + 1
    return counts


def is_closed(mesh: TriangleMesh) -> bool:
    """Every undirected edge must be used by exactly two triangles."""
    return all(c == 2 for c in edge_use_counts(mesh).values())


def weld_vertices(mesh: TriangleMesh, decimals: int = 9) -> TriangleMesh:
    """Merge vertices that coincide after rounding (undoes bridge duplicates)."""
    key = np.round(mesh.vertices, decimals)
    _, index, inverse = np.unique(key, axis=0, return_index=True,
                                  return_inverse=True)
    return TriangleMesh(mesh.vertices[index], inverse[mesh.faces])


def euler_characteristic(mesh: TriangleMesh) -> int:
    welded = weld_vertices(mesh)
    v = welded.vertices.shape[0]
    f = welded.faces.shape[0]
    e = len(edge_use_counts(welded))
    return v - e + f


def write_obj(mesh: TriangleMesh, path) -> None:
    lines = ["# skex mesh export"]
    for x, y, z in mesh.vertices:
        lines.append(f"v {x:.9g} {y:.9g} {z:.9g}")
    for a, b, c in mesh.faces:
        lines.append(f"f {a + 1} {b + 1} {c + 1}")
    with open(path, "w", encoding="ascii") as fh:
        fh.write("\n".join(lines) + "\n")


def write_stl(mesh: TriangleMesh, path) -> None:
    header = b"skex binary stl" + b"\x00" * 65
    normals = mesh.face_normals()
    with open(path, "wb") as fh:
        fh.write(header)
        fh.write(struct.pack("<I", mesh.n_faces))
        for i in range(mesh.n_faces):
            fh.write(struct.pack("<3f", *normals[i].astype(np.float32)))
            for vid in mesh.faces[i]:
                fh.write(struct.pack("<3f", *mesh.vertices[vid].astype(np.float32)))
            fh.write(struct.pack("<H", 0))
