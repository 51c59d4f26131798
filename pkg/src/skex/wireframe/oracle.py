"""Synthetic proposal generation from known geometry.

Stands in for a learned line/junction predictor so the binding stage can be
exercised end to end: true wireframe edges of a model are projected to
pixel space, perturbed, thinned, and mixed with clutter. Deterministic for
a given seed; the RNG is consumed in a fixed order (line jitter, junction
jitter, drops, clutter).
"""

from __future__ import annotations

import math

import numpy as np

from ..geomkern.solid import SolidModel
from ..imaging.camera import Camera
from .binding import EndpointProposal, LineProposal

# Corners sharper than this (turn angle, radians) get a side edge.
SHARP_ANGLE = math.radians(30.0)


def model_wire_edges(model: SolidModel, camera: Camera,
                     sagitta_tol: float = 1e-3) -> np.ndarray:
    """Projected 2D segments (n, 2, 2) of the model's wireframe.

    Edges are the tessellated profile loops at both extrusion caps plus
    side edges at sharp polyline corners (smooth walls contribute no side
    lines). Hidden-line removal is deliberately not applied: these are
    proposals, not renderings.
    """
    segs3d = []
    for body in model.bodies:
        tess = body.profile.tessellated(sagitta_tol)
        w0, w1 = body.w_interval()
        for poly in tess.polylines:
            ring = poly[:-1]
            cnt = ring.shape[0]
            for w in (w0, w1):
                world = body.frame.to_world(poly, w)
                for k in range(cnt):
                    segs3d.append((world[k], world[k + 1]))
            prev_dir = ring - np.roll(ring, 1, axis=0)
            next_dir = np.roll(ring, -1, axis=0) - ring
            prev_dir /= np.maximum(np.linalg.norm(prev_dir, axis=1,
                                                  keepdims=True), 1e-300)
            next_dir /= np.maximum(np.linalg.norm(next_dir, axis=1,
                                                  keepdims=True), 1e-300)
            turn = np.arccos(np.clip((prev_dir * next_dir).sum(axis=1),
                                     -1.0, 1.0))
            bottom = body.frame.to_world(ring, w0)
            top = body.frame.to_world(ring, w1)
            for k in np.flatnonzero(turn > SHARP_ANGLE):
                segs3d.append((bottom[k], top[k]))

    if not segs3d:
        return np.zeros((0, 2, 2))
    pts = np.asarray(segs3d, dtype=np.float64)          # (n, 2, 3)
    flat = pts.reshape(-1, 3)
    pix, depth = camera.project(flat)
    pix = pix.reshape(-1, 2, 2)
    depth = depth.reshape(-1, 2)
    visible = (depth > 1e-9).all(axis=1)
    return pix[visible]


def oracle_proposals(model: SolidModel, camera: Camera,
                     jitter_sigma: float = 0.0, drop_rate: float = 0.0,
                     clutter: int = 0, seed: int = 0,
                     sagitta_tol: float = 1e-3,
                     ) -> tuple[list[LineProposal], list[EndpointProposal]]:
    """Noisy line/endpoint proposals with known provenance.

    True lines come first in the output (minus drops), clutter lines are
    appended, so simulation tests can label kept lines by matching against
    the noiseless projection.
    """
    if not 0.0 <= drop_rate < 1.0:
        raise ValueError("drop_rate must lie in [0, 1)")
    rng = np.random.default_rng(seed)
    segs = model_wire_edges(model, camera, sagitta_tol)
    w, h = camera.size

    noisy = segs + rng.normal(0.0, jitter_sigma, size=segs.shape) \
        if jitter_sigma > 0 else segs.copy()

    # Junctions: weld the true segment endpoints, then jitter once each.
    raw = segs.reshape(-1, 2)
    _, uniq_idx = np.unique(np.round(raw, 6), axis=0, return_index=True)
    junctions = raw[np.sort(uniq_idx)]
    if jitter_sigma > 0:
        junctions = junctions + rng.normal(0.0, jitter_sigma,
                                           size=junctions.shape)

    keep = rng.random(segs.shape[0]) >= drop_rate
    lines = [LineProposal(tuple(seg[0]), tuple(seg[1]))
             for seg in noisy[keep]]

    for _ in range(clutter):
        while True:
            a = rng.uniform((0, 0), (w, h))
            b = rng.uniform((0, 0), (w, h))
            if not np.allclose(a, b):
                break
        lines.append(LineProposal(tuple(a), tuple(b)))

    endpoints = [EndpointProposal(tuple(j), 1.0) for j in junctions]
    return lines, endpoints
