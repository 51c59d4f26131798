"""Point clouds sampled from the boolean-composed surface of a model.

Candidates are drawn area-uniformly from each body's untrimmed boundary
(caps and side walls); a candidate survives only if occupancy flips across
it along its outward normal, i.e. the patch is actual surface of the final
solid rather than buried or cut away.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..errors import EmptyCloudError, EmptySurfaceError
from .solid import SolidModel


@dataclass(frozen=True)
class PointCloud:
    points: np.ndarray  # (n, 3) float64

    def __post_init__(self) -> None:
        pts = np.ascontiguousarray(self.points, dtype=np.float64)
        if pts.ndim != 2 or pts.shape[1] != 3:
            raise EmptyCloudError(f"point cloud must be (n, 3), got {pts.shape}")
        if pts.shape[0] == 0:
            raise EmptyCloudError("point cloud is empty")
        if not np.isfinite(pts).all():
            raise EmptyCloudError("point cloud contains non-finite values")
        pts.flags.writeable = False
        object.__setattr__(self, "points", pts)

    def __len__(self) -> int:
        return int(self.points.shape[0])


def normalize_points(pc: PointCloud) -> PointCloud:
    """Center the bounding box at the origin and scale its diagonal to 1.

    Degenerate clouds (zero diagonal) are translated only. Idempotent.
    """
    pts = pc.points
    lo = pts.min(axis=0)
    hi = pts.max(axis=0)
    center = 0.5 * (lo + hi)
    diag = float(np.linalg.norm(hi - lo))
    if diag <= 0:
        return PointCloud(pts - center)
    return PointCloud((pts - center) / diag)


class _FaceSampler:
    """Area-weighted sampler over the untrimmed boundary patches of a model."""

    def __init__(self, model: SolidModel, sagitta_tol: float) -> None:
        self.model = model
        self.sagitta_tol = sagitta_tol
        self.faces: list[dict] = []
        for body in model.bodies:
            tess = body.profile.tessellated(sagitta_tol)
            w0, w1 = body.w_interval()
            s = body.frame.scale
            cap_area = abs(tess.area) * s * s
            if cap_area > 0:
                for w, sign in ((w0, -1.0), (w1, 1.0)):
                    self.faces.append({
                        "kind": "cap", "body": body, "tess": tess,
                        "w": w, "normal_sign": sign, "area": cap_area,
                    })
            # Walls: one weighted pool of edges per body.
            a = np.concatenate([p[:-1] for p in tess.polylines], axis=0)
            b = np.concatenate([p[1:] for p in tess.polylines], axis=0)
            lengths = np.linalg.norm(b - a, axis=1)
            height = w1 - w0
            wall_area = float(lengths.sum() * s * height)
            if wall_area > 0:
                self.faces.append({
                    "kind": "wall", "body": body, "edge_a": a, "edge_b": b,
                    "cum": np.cumsum(lengths) / lengths.sum(),
                    "w0": w0, "w1": w1, "area": wall_area,
                })
        total = sum(f["area"] for f in self.faces)
        if total <= 0:
            raise EmptySurfaceError("model has no boundary area")
        self.weights = np.array([f["area"] / total for f in self.faces])

    def draw(self, count: int, rng: np.random.Generator) -> tuple[np.ndarray, np.ndarray]:
        """Candidate world points and their outward unit normals."""
        picks = rng.choice(len(self.faces), size=count, p=self.weights)
        points = np.empty((count, 3))
        normals = np.empty((count, 3))
        for fi in range(len(self.faces)):
            idx = np.flatnonzero(picks == fi)
            if idx.size == 0:
                continue
            face = self.faces[fi]
            body = face["body"]
            if face["kind"] == "cap":
                uv = self._sample_cap(face, idx.size, rng)
                points[idx] = body.frame.to_world(uv, face["w"])
                normals[idx] = face["normal_sign"] * body.frame.normal
            else:
                points[idx], normals[idx] = self._sample_wall(face, idx.size, rng)
        return points, normals

    def _sample_cap(self, face: dict, count: int,
                    rng: np.random.Generator) -> np.ndarray:
        tess = face["tess"]
        x0, y0, x1, y1 = tess.bbox
        out = np.empty((count, 2))
        have = 0
        attempts = 0
        while have < count:
            batch = max(64, 2 * (count - have))
            cand = rng.uniform((x0, y0), (x1, y1), size=(batch, 2))
            keep = cand[tess.contains(cand, boundary_tol=0.0)]
            take = min(keep.shape[0], count - have)
            out[have:have + take] = keep[:take]
            have += take
            attempts += 1
            if attempts > 10_000:
                raise EmptySurfaceError("cap rejection sampling stalled")
        return out

    def _sample_wall(self, face: dict, count: int,
                     rng: np.random.Generator) -> tuple[np.ndarray, np.ndarray]:
        body = face["body"]
        a, b = face["edge_a"], face["edge_b"]
        e = np.searchsorted(face["cum"], rng.random(count), side="left")
        e = np.minimum(e, a.shape[0] - 1)
        t = rng.random(count)[:, None]
        uv = a[e] * (1 - t) + b[e] * t
        w = rng.uniform(face["w0"], face["w1"], size=count)
        points = body.frame.to_world(uv, w)
        # Outward in-plane normal: right of the traversal direction, which is
        # outward for ccw outers and points into the opening for cw holes.
        d = b[e] - a[e]
        d /= np.maximum(np.linalg.norm(d, axis=1, keepdims=True), 1e-300)
        n2 = np.stack([d[:, 1], -d[:, 0]], axis=1)
        normals = n2[:, 0:1] * body.frame.e_u + n2[:, 1:2] * body.frame.e_v
        return points, normals


def sample_surface(model: SolidModel, n: int, band: float | None = None,
                   seed: int = 0, sagitta_tol: float = 1e-3,
                   max_zero_rounds: int = 64) -> PointCloud:
    """Sample ``n`` surviving surface points, deterministically for a seed.

    ``band`` is the probe offset for the occupancy-flip test; by default it
    is 1e-4 of the model's bounding-box diagonal. Raises EmptySurfaceError
    after ``max_zero_rounds`` consecutive batches with zero survivors (the
    usual cause: the boolean result is empty).
    """
    if n < 1:
        raise EmptyCloudError("need at least one sample")
    rng = np.random.default_rng(seed)
    sampler = _FaceSampler(model, sagitta_tol)
    if band is None:
        band = 1e-4 * max(model.diagonal(sagitta_tol), 1e-12)

    kept: list[np.ndarray] = []
    have = 0
    zero_rounds = 0
    while have < n:
        batch = max(256, n - have)
        pts, normals = sampler.draw(batch, rng)
        outside = model.occupancy(pts + band * normals, sagitta_tol)
        inside = model.occupancy(pts - band * normals, sagitta_tol)
        survive = outside != inside
        got = pts[survive]
        if got.shape[0] == 0:
            zero_rounds += 1
            if zero_rounds >= max_zero_rounds:
                raise EmptySurfaceError(
                    f"no surviving surface after {zero_rounds} empty rounds")
            continue
        zero_rounds = 0
        kept.append(got[: n - have])
        have += kept[-1].shape[0]
    return PointCloud(np.concatenate(kept, axis=0))
