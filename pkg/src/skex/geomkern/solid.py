"""Solid bodies as implicit occupancy: extrusions composed by boolean ops.

Occupancy is the ground truth everywhere downstream (volume estimates,
surviving-surface sampling, metrics); mesh export is visualization-grade
and deliberately does not trim booleans.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..seqmodel.commands import BooleanOp, ExtrudeKind
from .frame import Frame
from .profile import Profile


@dataclass(frozen=True)
class ExtrusionBody:
    profile: Profile
    frame: Frame
    e1: float
    e2: float
    kind: ExtrudeKind
    op: BooleanOp

    def __post_init__(self) -> None:
        if self.e1 < 0 or self.e2 < 0:
            raise ValueError("extrusion extents must be non-negative")
        w0, w1 = self.w_interval()
        if not w1 > w0:
            raise ValueError("extrusion has zero active extent")

    def w_interval(self) -> tuple[float, float]:
        """Active slab along the plane normal for this extrude type."""
        if self.kind is ExtrudeKind.ONE_SIDED:
            return 0.0, self.e1
        if self.kind is ExtrudeKind.SYMMETRIC:
            return -self.e1 / 2.0, self.e1 / 2.0
        return -self.e2, self.e1  # TWO_SIDED

    def occupancy(self, pts, sagitta_tol: float = 1e-3) -> np.ndarray:
        """Membership of world points: slab test plus profile containment.

        The profile test here runs without the boundary tolerance; exact
        sketch-boundary membership is measure-zero and the surface sampler
        probes with explicit offsets anyway.
        """
        pts = np.atleast_2d(np.asarray(pts, dtype=np.float64))
        uv, w = self.frame.to_local(pts)
        w0, w1 = self.w_interval()
        mask = (w >= w0) & (w <= w1)
        if mask.any():
            inner = self.profile.contains(uv[mask], sagitta_tol,
                                          boundary_tol=0.0)
            out = np.zeros(pts.shape[0], dtype=bool)
            out[np.flatnonzero(mask)] = inner
            return out
        return mask

    def world_bbox(self, sagitta_tol: float = 1e-3) -> tuple[np.ndarray, np.ndarray]:
        """Axis-aligned bounds of the (untrimmed) body."""
        tess = self.profile.tessellated(sagitta_tol)
        uv = np.concatenate([p for p in tess.polylines], axis=0)
        w0, w1 = self.w_interval()
        corners = np.concatenate([self.frame.to_world(uv, w0),
                                  self.frame.to_world(uv, w1)], axis=0)
        return corners.min(axis=0), corners.max(axis=0)


@dataclass(frozen=True)
class SolidModel:
    bodies: tuple[ExtrusionBody, ...]

    def __post_init__(self) -> None:
        bodies = tuple(self.bodies)
        if not bodies:
            raise ValueError("model needs at least one body")
        if bodies[0].op is not BooleanOp.NEW_BODY:
            # Normalize: whatever the first op claims, it starts the model.
            first = ExtrusionBody(bodies[0].profile, bodies[0].frame,
                                  bodies[0].e1, bodies[0].e2,
                                  bodies[0].kind, BooleanOp.NEW_BODY)
            bodies = (first,) + bodies[1:]
        object.__setattr__(self, "bodies", bodies)

    def occupancy(self, pts, sagitta_tol: float = 1e-3) -> np.ndarray:
        """Fold bodies left to right: new-body/join add, cut subtracts,
        intersect keeps the overlap."""
        pts = np.atleast_2d(np.asarray(pts, dtype=np.float64))
        acc = np.zeros(pts.shape[0], dtype=bool)
        for body in self.bodies:
            occ = body.occupancy(pts, sagitta_tol)
            if body.op in (BooleanOp.NEW_BODY, BooleanOp.JOIN):
                acc |= occ
            elif body.op is BooleanOp.CUT:
                acc &= ~occ
            else:  # INTERSECT
                acc &= occ
        return acc

    def world_bbox(self, sagitta_tol: float = 1e-3) -> tuple[np.ndarray, np.ndarray]:
        los, his = zip(*(b.world_bbox(sagitta_tol) for b in self.bodies))
        return np.min(los, axis=0), np.max(his, axis=0)

    def diagonal(self, sagitta_tol: float = 1e-3) -> float:
        lo, hi = self.world_bbox(sagitta_tol)
        return float(np.linalg.norm(hi - lo))


def body_occupancy(body: ExtrusionBody, p, sagitta_tol: float = 1e-3) -> bool:
    return bool(body.occupancy(np.asarray(p, dtype=np.float64)[None, :],
                               sagitta_tol)[0])


def model_occupancy(model: SolidModel, p, sagitta_tol: float = 1e-3) -> bool:
    return bool(model.occupancy(np.asarray(p, dtype=np.float64)[None, :],
                                sagitta_tol)[0])
