"""Pinhole cameras and deterministic view rings.

Pixel coordinates have their origin at the top-left corner; +x runs right,
+y runs down. Projection returns pixel positions plus the forward depth of
each point (positive in front of the camera).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from ..errors import ArgumentError

_EPS = 1e-9


@dataclass(frozen=True)
class Camera:
    eye: tuple[float, float, float]
    look_at: tuple[float, float, float]
    up: tuple[float, float, float]
    fov_y: float                      # vertical field of view, radians
    size: tuple[int, int]             # (width, height) pixels

    def __post_init__(self) -> None:
        object.__setattr__(self, "eye", tuple(float(v) for v in self.eye))
        object.__setattr__(self, "look_at", tuple(float(v) for v in self.look_at))
        object.__setattr__(self, "up", tuple(float(v) for v in self.up))
        object.__setattr__(self, "size", (int(self.size[0]), int(self.size[1])))
        if self.eye == self.look_at:
            raise ArgumentError("camera eye and look-at coincide")
        if not 0.0 < self.fov_y < math.pi:
            raise ArgumentError(f"fov must lie in (0, pi), got {self.fov_y}")
        if self.size[0] < 1 or self.size[1] < 1:
            raise ArgumentError("image size must be positive")

    def basis(self) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        """(right, down, forward) unit vectors; falls back to +x up at poles."""
        eye = np.asarray(self.eye)
        forward = np.asarray(self.look_at) - eye
        forward = forward / np.linalg.norm(forward)
        up = np.asarray(self.up, dtype=np.float64)
        right = np.cross(forward, up)
        if np.linalg.norm(right) < _EPS:
            right = np.cross(forward, np.array([1.0, 0.0, 0.0]))
        right = right / np.linalg.norm(right)
        down = np.cross(forward, right)
        return right, down, forward

    def project(self, points) -> tuple[np.ndarray, np.ndarray]:
        """World points (n,3) to pixel coords (n,2) and forward depth (n,)."""
        pts = np.atleast_2d(np.asarray(points, dtype=np.float64))
        right, down, forward = self.basis()
        rel = pts - np.asarray(self.eye)
        x = rel @ right
        y = rel @ down
        z = rel @ forward
        w, h = self.size
        focal = (h / 2.0) / math.tan(self.fov_y / 2.0)
        with np.errstate(divide="ignore", invalid="ignore"):
            px = w / 2.0 + focal * x / z
            py = h / 2.0 + focal * y / z
        return np.stack([px, py], axis=1), z

    def to_dict(self) -> dict:
        return {
            "eye": list(self.eye),
            "look_at": list(self.look_at),
            "up": list(self.up),
            "fov_y": self.fov_y,
            "size": list(self.size),
        }

    @classmethod
    def from_dict(cls, doc: dict) -> "Camera":
        return cls(tuple(doc["eye"]), tuple(doc["look_at"]), tuple(doc["up"]),
                   float(doc["fov_y"]), tuple(doc["size"]))


def camera_ring(n_views: int, radius: float, elevations,
                fov_y: float = math.radians(40.0),
                size: tuple[int, int] = (512, 512),
                look_at: tuple[float, float, float] = (0.0, 0.0, 0.0),
                ) -> list[Camera]:
    """Evenly spaced azimuths at each elevation, all aimed at ``look_at``.

    ``n_views`` must divide evenly across the elevations (raises
    ArgumentError otherwise). The default configuration elsewhere in the
    toolkit is 36 views = 12 azimuths x 3 elevations.
    """
    elevations = list(elevations)
    if not elevations:
        raise ArgumentError("need at least one elevation")
    if n_views % len(elevations) != 0:
        raise ArgumentError(
            f"{n_views} views do not divide over {len(elevations)} elevations")
    per = n_views // len(elevations)
    cams = []
    cx, cy, cz = look_at
    for elev in elevations:
        for k in range(per):
            az = 2.0 * math.pi * k / per
            eye = (cx + radius * math.cos(elev) * math.cos(az),
                   cy + radius * math.cos(elev) * math.sin(az),
                   cz + radius * math.sin(elev))
            cams.append(Camera(eye=eye, look_at=look_at, up=(0.0, 0.0, 1.0),
                               fov_y=fov_y, size=size))
    return cams
