"""Wireframe layer: binding line proposals to junctions, LOI sampling."""

from .binding import (
    DEFAULT_EPSILON,
    BoundLine,
    EndpointProposal,
    LineProposal,
    LoiPoints,
    Wireframe,
    bind,
    default_t_samples,
    loi_points,
    proposals_from_dict,
    proposals_to_dict,
    wireframe_to_dict,
    wireframe_to_json,
)
from .oracle import model_wire_edges, oracle_proposals

__all__ = [
    "DEFAULT_EPSILON", "BoundLine", "EndpointProposal", "LineProposal",
    "LoiPoints", "Wireframe", "bind", "default_t_samples", "loi_points",
    "proposals_from_dict", "proposals_to_dict",
    "wireframe_to_dict", "wireframe_to_json",
    "model_wire_edges", "oracle_proposals",
]
