"""Planar sketch curves and their polyline tessellation.

Curves live in sketch-local coordinates. An arc is stored by its two
endpoints, sweep angle and orientation flag; ccw=True means the arc bulges
to the left of the start->end chord direction. The center construction
places the center on the perpendicular bisector at signed distance
r*cos(sweep/2) so that minor arcs (< pi) sit opposite the bulge and major
arcs (> pi) sit on the same side.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from ..errors import DegenerateArcError

_CHORD_TOL = 1e-12


@dataclass(frozen=True)
class LineSegment:
    start: tuple[float, float]
    end: tuple[float, float]


@dataclass(frozen=True)
class ArcCurve:
    start: tuple[float, float]
    end: tuple[float, float]
    sweep: float          # radians, in (0, 2*pi)
    ccw: bool


@dataclass(frozen=True)
class CircleCurve:
    center: tuple[float, float]
    radius: float


Curve = LineSegment | ArcCurve | CircleCurve
Loop = tuple[Curve, ...]


def arc_geometry(start, end, sweep: float, ccw: bool) -> tuple[np.ndarray, float]:
    """Center and radius of the arc through ``start``/``end`` with ``sweep``.

    radius = |chord| / (2 sin(sweep/2)). Raises DegenerateArcError when the
    endpoints coincide or the sweep is outside (0, 2*pi).
    """
    p0 = np.asarray(start, dtype=np.float64)
    p1 = np.asarray(end, dtype=np.float64)
    chord = p1 - p0
    chord_len = float(np.linalg.norm(chord))
    if chord_len <= _CHORD_TOL:
        raise DegenerateArcError("arc endpoints coincide")
    if not 0.0 < sweep < 2.0 * math.pi:
        raise DegenerateArcError(
            f"arc sweep must lie in (0, 2*pi), got {sweep}")
    radius = chord_len / (2.0 * math.sin(sweep / 2.0))
    mid = 0.5 * (p0 + p1)
    left = np.array([-chord[1], chord[0]]) / chord_len
    offset = radius * math.cos(sweep / 2.0)
    center = mid - left * offset if ccw else mid + left * offset
    return center, radius


def arc_points(arc: ArcCurve, t: np.ndarray) -> np.ndarray:
    """Points along the arc at parameters t in [0,1] (t=0 start, t=1 end)."""
    center, radius = arc_geometry(arc.start, arc.end, arc.sweep, arc.ccw)
    a0 = math.atan2(arc.start[1] - center[1], arc.start[0] - center[0])
    sign = -1.0 if arc.ccw else 1.0
    ang = a0 + sign * arc.sweep * np.asarray(t, dtype=np.float64)
    return center + radius * np.stack([np.cos(ang), np.sin(ang)], axis=-1)


def _arc_segment_count(radius: float, sweep: float, sagitta_tol: float) -> int:
    # Per-segment angle such that the sagitta r*(1-cos(d/2)) stays under tol.
    ratio = 1.0 - sagitta_tol / max(radius, 1e-300)
    if ratio <= -1.0:
        d_max = 2.0 * math.pi
    else:
        d_max = 2.0 * math.acos(min(1.0, ratio))
    if d_max <= 0:
        d_max = 1e-6
    return max(1, math.ceil(sweep / d_max))


def tessellate_curve(curve: Curve, sagitta_tol: float) -> np.ndarray:
    """Polyline approximation of one curve, including both endpoints.

    Circles return a closed polyline (first point repeated at the end),
    starting at angle 0, with at least 8 segments.
    """
    if isinstance(curve, LineSegment):
        return np.array([curve.start, curve.end], dtype=np.float64)
    if isinstance(curve, ArcCurve):
        _, radius = arc_geometry(curve.start, curve.end, curve.sweep, curve.ccw)
        n = _arc_segment_count(radius, curve.sweep, sagitta_tol)
        return arc_points(curve, np.linspace(0.0, 1.0, n + 1))
    if isinstance(curve, CircleCurve):
        if curve.radius <= 0:
            raise DegenerateArcError("circle radius must be positive")
        n = max(8, _arc_segment_count(curve.radius, 2.0 * math.pi, sagitta_tol))
        ang = np.linspace(0.0, 2.0 * math.pi, n + 1)
        pts = np.asarray(curve.center) + curve.radius * np.stack(
            [np.cos(ang), np.sin(ang)], axis=-1)
        pts[-1] = pts[0]
        return pts
    raise TypeError(f"unknown curve type {type(curve)!r}")


def tessellate_loop(loop: Loop, sagitta_tol: float) -> np.ndarray:
    """Closed polyline for a loop of chained curves (or a lone circle).

    The chain is assumed closed within tolerance; the final vertex is
    snapped exactly onto the first so consumers can rely on polyline[0] ==
    polyline[-1].
    """
    if len(loop) == 1 and isinstance(loop[0], CircleCurve):
        return tessellate_curve(loop[0], sagitta_tol)
    points: list[np.ndarray] = []
    for curve in loop:
        pts = tessellate_curve(curve, sagitta_tol)
        if points:
            pts = pts[1:]  # joint vertex already present
        points.append(pts)
    poly = np.concatenate(points, axis=0)
    poly[-1] = poly[0]
    return poly
