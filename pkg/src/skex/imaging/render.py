"""Z-buffered software rasterizer with flat Lambertian shading.

Intensity of a face is max(0, n . l) with the light direction fixed at the
camera's backward axis (a headlight); the background is white (1.0).
Coverage uses an inclusive edge rule so the output is symmetric under
exact image-space symmetries, and all operations are deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..geomkern.mesh import TriangleMesh
from .camera import Camera

_NEAR = 1e-6


@dataclass(frozen=True)
class GrayImage:
    pixels: np.ndarray  # (h, w) float64 in [0, 1]

    def __post_init__(self) -> None:
        px = np.ascontiguousarray(self.pixels, dtype=np.float64)
        if px.ndim != 2:
            raise ValueError("image must be 2-D")
        if not np.isfinite(px).all() or px.min() < 0 or px.max() > 1:
            raise ValueError("intensities must be finite and in [0, 1]")
        px.flags.writeable = False
        object.__setattr__(self, "pixels", px)

    @property
    def width(self) -> int:
        return int(self.pixels.shape[1])

    @property
    def height(self) -> int:
        return int(self.pixels.shape[0])

    def to_u8(self) -> np.ndarray:
        return np.floor(self.pixels * 255.0 + 0.5).astype(np.uint8)

    @classmethod
    def from_u8(cls, data: np.ndarray) -> "GrayImage":
        return cls(np.asarray(data, dtype=np.float64) / 255.0)


def render(mesh: TriangleMesh, camera: Camera,
           background: float = 1.0) -> GrayImage:
    """Rasterize a triangle mesh; an empty mesh gives a background image.

    Triangles with any vertex at or behind the near plane are skipped
    rather than clipped; ring cameras in this toolkit keep models fully in
    frustum, which is all the synthetic pipeline needs.
    """
    w, h = camera.size
    img = np.full((h, w), float(background))
    if mesh.faces.shape[0] == 0:
        return GrayImage(img)
    zbuf = np.full((h, w), np.inf)

    pix, depth = camera.project(mesh.vertices)
    _, _, forward = camera.basis()
    light = -forward
    normals = mesh.face_normals()
    shades = np.maximum(normals @ light, 0.0)

    for f in range(mesh.faces.shape[0]):
        ia, ib, ic = mesh.faces[f]
        if depth[ia] <= _NEAR or depth[ib] <= _NEAR or depth[ic] <= _NEAR:
            continue
        pa, pb, pc = pix[ia], pix[ib], pix[ic]
        x_min = max(int(np.floor(min(pa[0], pb[0], pc[0]) - 0.5)), 0)
        x_max = min(int(np.ceil(max(pa[0], pb[0], pc[0]) + 0.5)), w - 1)
        y_min = max(int(np.floor(min(pa[1], pb[1], pc[1]) - 0.5)), 0)
        y_max = min(int(np.ceil(max(pa[1], pb[1], pc[1]) + 0.5)), h - 1)
        if x_min > x_max or y_min > y_max:
            continue

        denom = ((pb[0] - pa[0]) * (pc[1] - pa[1])
                 - (pb[1] - pa[1]) * (pc[0] - pa[0]))
        if denom == 0.0:
            continue

        xs = np.arange(x_min, x_max + 1) + 0.5
        ys = np.arange(y_min, y_max + 1) + 0.5
        gx, gy = np.meshgrid(xs, ys)

        l1 = ((pb[0] - pa[0]) * (gy - pa[1])
              - (pb[1] - pa[1]) * (gx - pa[0])) / denom
        l2 = ((pc[0] - pb[0]) * (gy - pb[1])
              - (pc[1] - pb[1]) * (gx - pb[0])) / denom
        l3 = 1.0 - l1 - l2
        # Inclusive coverage; sign flips with winding, so accept either.
        cover = ((l1 >= 0) & (l2 >= 0) & (l3 >= 0)) | \
                ((l1 <= 0) & (l2 <= 0) & (l3 <= 0))
        if not cover.any():
            continue

        # Perspective-correct depth via linear interpolation of 1/z.
        # Barycentric weights: l2 -> vertex a, l3 -> vertex b, l1 -> vertex c.
        inv_z = (l2 / depth[ia] + l3 / depth[ib] + l1 / depth[ic])
        with np.errstate(divide="ignore"):
            z = 1.0 / inv_z
        z = np.where(inv_z > 0, z, np.inf)

        win = img[y_min:y_max + 1, x_min:x_max + 1]
        zwin = zbuf[y_min:y_max + 1, x_min:x_max + 1]
        update = cover & (z < zwin)
        win[update] = shades[f]
        zwin[update] = z[update]

    return GrayImage(img)
