"""Closed 2D regions bounded by one or more loops, with even-odd semantics.

A Profile owns its loops in sketch-local coordinates. All geometric queries
run on a cached tessellation: loops become closed polylines, their nesting
depths are computed, and orientations are canonicalized (even depth
counter-clockwise, odd depth clockwise) so that signed areas sum to the
even-odd area and wall normals can be derived from traversal direction.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .curves import Loop, tessellate_loop

# Upper bound on points*edges per vectorized containment block.
_BLOCK = 4_000_000


@dataclass(frozen=True)
class Profile:
    loops: tuple[Loop, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "loops", tuple(tuple(l) for l in self.loops))
        if not self.loops:
            raise ValueError("profile needs at least one loop")

    def tessellated(self, sagitta_tol: float) -> "TessellatedProfile":
        return _tessellate_profile(self, float(sagitta_tol))

    def contains(self, pts, sagitta_tol: float = 1e-3,
                 boundary_tol: float = 1e-9) -> np.ndarray:
        return self.tessellated(sagitta_tol).contains(pts, boundary_tol)


def signed_area(poly: np.ndarray) -> float:
    """Shoelace area of a closed polyline (positive = counter-clockwise)."""
    x, y = poly[:-1, 0], poly[:-1, 1]
    xn, yn = poly[1:, 0], poly[1:, 1]
    return 0.5 * float(np.sum(x * yn - xn * y))


def _crossings(pts: np.ndarray, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Parity of rightward ray crossings for each point against edges (a, b)."""
    n = pts.shape[0]
    e = a.shape[0]
    out = np.zeros(n, dtype=bool)
    step = max(1, _BLOCK // max(e, 1))
    for lo in range(0, n, step):
        p = pts[lo:lo + step]
        px, py = p[:, 0:1], p[:, 1:2]
        ay, by = a[:, 1][None, :], b[:, 1][None, :]
        ax, bx = a[:, 0][None, :], b[:, 0][None, :]
        straddles = (ay > py) != (by > py)
        with np.errstate(divide="ignore", invalid="ignore"):
            x_int = ax + (py - ay) * (bx - ax) / (by - ay)
        hits = straddles & (px < x_int)
        out[lo:lo + step] = (hits.sum(axis=1) & 1).astype(bool)
    return out


def _near_edges(pts: np.ndarray, a: np.ndarray, b: np.ndarray,
                tol: float) -> np.ndarray:
    """True where a point lies within ``tol`` of any edge."""
    if tol <= 0:
        return np.zeros(pts.shape[0], dtype=bool)
    n = pts.shape[0]
    e = a.shape[0]
    out = np.zeros(n, dtype=bool)
    ab = b - a
    ab_len2 = np.maximum((ab * ab).sum(axis=1), 1e-300)
    step = max(1, _BLOCK // max(e, 1))
    tol2 = tol * tol
    for lo in range(0, n, step):
        p = pts[lo:lo + step]
        ap = p[:, None, :] - a[None, :, :]
        t = np.clip((ap * ab[None, :, :]).sum(axis=2) / ab_len2[None, :], 0.0, 1.0)
        closest = a[None, :, :] + t[:, :, None] * ab[None, :, :]
        d2 = ((p[:, None, :] - closest) ** 2).sum(axis=2)
        out[lo:lo + step] = (d2 <= tol2).any(axis=1)
    return out


class TessellatedProfile:
    """Polyline form of a profile with nesting, orientation, and area data."""

    def __init__(self, profile: Profile, sagitta_tol: float) -> None:
        raw = [tessellate_loop(loop, sagitta_tol) for loop in profile.loops]
        self.depths = _nesting_depths(raw)
        self.polylines: list[np.ndarray] = []
        for poly, depth in zip(raw, self.depths):
            ccw = signed_area(poly) > 0
            want_ccw = depth % 2 == 0
            if ccw != want_ccw:
                poly = poly[::-1].copy()
            poly.flags.writeable = False
            self.polylines.append(poly)
        self.loop_areas = [signed_area(p) for p in self.polylines]
        # Sum of canonically signed areas equals the even-odd area for
        # non-crossing loop arrangements.
        self.area = float(sum(self.loop_areas))
        self.groups = _group_loops(self.depths, self.polylines)

        a = np.concatenate([p[:-1] for p in self.polylines], axis=0)
        b = np.concatenate([p[1:] for p in self.polylines], axis=0)
        self._edge_a = a
        self._edge_b = b
        lo = a.min(axis=0)
        hi = a.max(axis=0)
        self.bbox = (float(lo[0]), float(lo[1]), float(hi[0]), float(hi[1]))

    @property
    def edges(self) -> tuple[np.ndarray, np.ndarray]:
        return self._edge_a, self._edge_b

    def contains(self, pts, boundary_tol: float = 1e-9) -> np.ndarray:
        """Even-odd membership; points within boundary_tol count as inside."""
        pts = np.atleast_2d(np.asarray(pts, dtype=np.float64))
        inside = _crossings(pts, self._edge_a, self._edge_b)
        if boundary_tol > 0:
            inside |= _near_edges(pts, self._edge_a, self._edge_b, boundary_tol)
        return inside


def _nesting_depths(polylines: list[np.ndarray]) -> list[int]:
    depths = []
    for i, poly in enumerate(polylines):
        probe = poly[np.argmax(poly[:-1, 0])][None, :]
        depth = 0
        for j, other in enumerate(polylines):
            if j == i:
                continue
            if _crossings(probe, other[:-1], other[1:])[0]:
                depth += 1
        depths.append(depth)
    return depths


def _group_loops(depths: list[int],
                 polylines: list[np.ndarray]) -> list[tuple[int, list[int]]]:
    """Pair each odd-depth loop with its direct even-depth parent."""
    groups = {i: [] for i, d in enumerate(depths) if d % 2 == 0}
    for i, d in enumerate(depths):
        if d % 2 == 0:
            continue
        probe = polylines[i][np.argmax(polylines[i][:-1, 0])][None, :]
        parent = None
        for j, dj in enumerate(depths):
            if dj != d - 1:
                continue
            if _crossings(probe, polylines[j][:-1], polylines[j][1:])[0]:
                parent = j
                break
        if parent is None:  # malformed nesting; treat as its own region
            groups[i] = []
        else:
            groups[parent].append(i)
    return [(outer, holes) for outer, holes in groups.items()]


@lru_cache(maxsize=512)
def _tessellate_profile(profile: Profile, sagitta_tol: float) -> TessellatedProfile:
    return TessellatedProfile(profile, sagitta_tol)


def point_in_profile(profile: Profile, q, sagitta_tol: float = 1e-3,
                     boundary_tol: float = 1e-9) -> bool:
    """Even-odd membership test for a single query point."""
    return bool(profile.contains(np.asarray(q, dtype=np.float64)[None, :],
                                 sagitta_tol, boundary_tol)[0])
