"""Sketch-plane frames.

The plane normal is the spherical direction (theta, phi); gamma spins the
in-plane axes about the normal. The reference tangent is z_hat x n, with an
x_hat fallback when the normal is (anti)parallel to z, so theta=phi=gamma=0
yields the identity frame.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from ..errors import ScaleError

_POLE_EPS = 1e-9


def _freeze(a: np.ndarray) -> np.ndarray:
    a = np.ascontiguousarray(a, dtype=np.float64)
    a.flags.writeable = False
    return a


@dataclass(frozen=True)
class Frame:
    """Right-handed orthonormal sketch frame with a uniform sketch scale."""

    origin: np.ndarray
    e_u: np.ndarray
    e_v: np.ndarray
    normal: np.ndarray
    scale: float

    def __post_init__(self) -> None:
        for name in ("origin", "e_u", "e_v", "normal"):
            object.__setattr__(self, name, _freeze(getattr(self, name)))

    def to_world(self, uv: np.ndarray, w: np.ndarray | float) -> np.ndarray:
        """Map sketch coordinates (u, v) plus normal offset w to world points."""
        uv = np.atleast_2d(np.asarray(uv, dtype=np.float64))
        w = np.broadcast_to(np.asarray(w, dtype=np.float64), uv.shape[:1])
        return (self.origin
                + self.scale * (uv[:, :1] * self.e_u + uv[:, 1:2] * self.e_v)
                + w[:, None] * self.normal)

    def to_local(self, points: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        """Inverse of to_world: returns ((n,2) sketch coords, (n,) offsets)."""
        d = np.atleast_2d(np.asarray(points, dtype=np.float64)) - self.origin
        u = d @ self.e_u / self.scale
        v = d @ self.e_v / self.scale
        w = d @ self.normal
        return np.stack([u, v], axis=1), w


def _rotate_about(vec: np.ndarray, axis: np.ndarray, angle: float) -> np.ndarray:
    # Rodrigues rotation; axis must be unit length.
    c, s = math.cos(angle), math.sin(angle)
    return (vec * c + np.cross(axis, vec) * s + axis * (axis @ vec) * (1.0 - c))


def sketch_plane_frame(theta: float, phi: float, gamma: float,
                       origin, scale: float) -> Frame:
    """Build the frame for plane orientation (theta, phi, gamma) at ``origin``.

    theta/phi are the polar/azimuth angles of the plane normal in radians,
    gamma the in-plane rotation. Raises ScaleError for non-positive scale.
    """
    if scale <= 0:
        raise ScaleError(f"sketch scale must be positive, got {scale}")
    n = np.array([
        math.sin(theta) * math.cos(phi),
        math.sin(theta) * math.sin(phi),
        math.cos(theta),
    ])
    n /= np.linalg.norm(n)
    t0 = np.cross(np.array([0.0, 0.0, 1.0]), n)
    norm_t0 = np.linalg.norm(t0)
    if norm_t0 > _POLE_EPS:
        t0 /= norm_t0
    else:
        t0 = np.array([1.0, 0.0, 0.0])
    e_u = _rotate_about(t0, n, gamma)
    e_u /= np.linalg.norm(e_u)
    e_v = np.cross(n, e_u)
    return Frame(origin=np.asarray(origin, dtype=np.float64),
                 e_u=e_u, e_v=e_v, normal=n, scale=float(scale))
