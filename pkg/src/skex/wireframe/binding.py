"""Endpoint-line binding and line-of-interest sampling.

Line proposals carry their own endpoints (x1, x2); endpoint proposals are
junction candidates (y). Each line endpoint snaps to its nearest endpoint
proposal; the binding cost is the larger of the two squared distances and
lines are kept only when that cost stays strictly below the threshold.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

import numpy as np

from ..errors import ArgumentError, RangeError

# 2-pixel snap radius by default (threshold compares squared distances).
DEFAULT_EPSILON = 4.0


@dataclass(frozen=True)
class LineProposal:
    x1: tuple[float, float]
    x2: tuple[float, float]

    def __post_init__(self) -> None:
        object.__setattr__(self, "x1", (float(self.x1[0]), float(self.x1[1])))
        object.__setattr__(self, "x2", (float(self.x2[0]), float(self.x2[1])))
        if self.x1 == self.x2:
            raise ArgumentError("line proposal endpoints coincide")


@dataclass(frozen=True)
class EndpointProposal:
    """Junction candidate in pixel coordinates (origin top-left)."""

    position: tuple[float, float]
    score: float = 1.0

    def __post_init__(self) -> None:
        object.__setattr__(self, "position",
                           (float(self.position[0]), float(self.position[1])))
        if not 0.0 <= self.score <= 1.0:
            raise RangeError(f"endpoint score must be in [0,1], got {self.score}")


@dataclass(frozen=True)
class BoundLine:
    x1: tuple[float, float]
    x2: tuple[float, float]
    y1: tuple[float, float]
    y2: tuple[float, float]
    d1: float      # |x1 - y1|^2
    d2: float      # |x2 - y2|^2
    cost: float    # max(d1, d2)


@dataclass(frozen=True)
class Wireframe:
    lines: tuple[BoundLine, ...]
    endpoints: tuple[EndpointProposal, ...]


def bind(lines: list[LineProposal], endpoints: list[EndpointProposal],
         epsilon: float = DEFAULT_EPSILON) -> Wireframe:
    """Snap line endpoints to nearest endpoint proposals and filter by cost.

    Nearest-neighbor ties resolve to the lowest endpoint index. A line is
    kept iff max(d1, d2) < epsilon (strict). Empty line input yields an
    empty wireframe; lines without any endpoint proposals are an error.
    """
    if not lines:
        return Wireframe((), tuple(endpoints))
    if not endpoints:
        raise ArgumentError("cannot bind lines without endpoint proposals")

    ends = np.asarray([e.position for e in endpoints], dtype=np.float64)
    p1 = np.asarray([l.x1 for l in lines], dtype=np.float64)
    p2 = np.asarray([l.x2 for l in lines], dtype=np.float64)

    def nearest(p: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        d2 = ((p[:, None, :] - ends[None, :, :]) ** 2).sum(axis=2)
        idx = np.argmin(d2, axis=1)  # argmin takes the lowest index on ties
        return idx, d2[np.arange(p.shape[0]), idx]

    i1, d1 = nearest(p1)
    i2, d2 = nearest(p2)
    cost = np.maximum(d1, d2)

    kept = []
    for k in np.flatnonzero(cost < epsilon):
        kept.append(BoundLine(
            x1=lines[k].x1, x2=lines[k].x2,
            y1=endpoints[i1[k]].position, y2=endpoints[i2[k]].position,
            d1=float(d1[k]), d2=float(d2[k]), cost=float(cost[k])))
    return Wireframe(tuple(kept), tuple(endpoints))


@dataclass(frozen=True)
class LoiPoints:
    """The three sampling-point sets for one bound line."""

    anchors: np.ndarray        # (2, 2): the snapped endpoints y1, y2
    line_samples: np.ndarray   # (t, 2): interpolation over x1, x2
    snapped_samples: np.ndarray  # (t, 2): interpolation over y1, y2


def default_t_samples(count: int = 32) -> np.ndarray:
    return np.linspace(0.0, 1.0, count)


def loi_points(line: BoundLine, t_samples=None) -> LoiPoints:
    """Affine sampling (1-t)*p1 + t*p2 along both endpoint pairs."""
    t = default_t_samples() if t_samples is None else np.asarray(
        t_samples, dtype=np.float64)
    if t.size == 0:
        raise ArgumentError("t_samples must be non-empty")
    if (t < 0).any() or (t > 1).any():
        raise RangeError("t samples must lie in [0, 1]")

    def interp(a, b) -> np.ndarray:
        a = np.asarray(a, dtype=np.float64)
        b = np.asarray(b, dtype=np.float64)
        return (1.0 - t)[:, None] * a + t[:, None] * b

    return LoiPoints(
        anchors=np.asarray([line.y1, line.y2], dtype=np.float64),
        line_samples=interp(line.x1, line.x2),
        snapped_samples=interp(line.y1, line.y2),
    )


# -- interchange -------------------------------------------------------------

def wireframe_to_dict(wf: Wireframe) -> dict:
    """Pixel-coordinate document: 11 floats per line
    (x1, y1 of first endpoint, ... then snapped pair, then d1, d2, cost)."""
    return {
        "lines": [
            [*l.x1, *l.x2, *l.y1, *l.y2, l.d1, l.d2, l.cost]
            for l in wf.lines
        ],
        "endpoints": [[*e.position, e.score] for e in wf.endpoints],
    }


def wireframe_to_json(wf: Wireframe) -> str:
    return json.dumps(wireframe_to_dict(wf), indent=2) + "\n"


def proposals_to_dict(lines: list[LineProposal],
                      endpoints: list[EndpointProposal]) -> dict:
    return {
        "lines": [[*l.x1, *l.x2] for l in lines],
        "endpoints": [[*e.position, e.score] for e in endpoints],
    }


def proposals_from_dict(doc: dict) -> tuple[list[LineProposal], list[EndpointProposal]]:
    lines = [LineProposal((l[0], l[1]), (l[2], l[3])) for l in doc["lines"]]
    endpoints = [EndpointProposal((e[0], e[1]), e[2] if len(e) > 2 else 1.0)
                 for e in doc["endpoints"]]
    return lines, endpoints
