"""Execution of validated command sequences into solid models.

Normalized [0,1] parameters are interpreted as: theta -> [0, pi], phi and
gamma -> [0, 2*pi), arc sweep -> (0, 2*pi); plane origin, sketch scale and
extrusion extents are taken directly in world units (the dataset generator
and the executor share this convention; manifests record it).
"""

from __future__ import annotations

import math

from ..errors import GrammarError
from ..seqmodel.commands import (
    BooleanOp,
    CadSequence,
    CommandType,
    ExtrudeKind,
)
from ..seqmodel.validate import CLOSURE_TOL, validate
from .curves import ArcCurve, CircleCurve, Curve, LineSegment
from .frame import sketch_plane_frame
from .profile import Profile
from .solid import ExtrusionBody, SolidModel

TWO_PI = 2.0 * math.pi


def denormalize_angles(theta: float, phi: float, gamma: float) -> tuple[float, float, float]:
    return theta * math.pi, phi * TWO_PI, gamma * TWO_PI


def build_solid(seq: CadSequence, *, validate_first: bool = True,
                closure_tol: float = CLOSURE_TOL) -> SolidModel:
    """Execute a sequence into a SolidModel.

    Raises GrammarError when validation fails (or, with validate_first off,
    when the walk itself encounters an impossible structure).
    """
    if validate_first:
        report = validate(seq, closure_tol)
        if not report.valid:
            first = report.failures[0]
            raise GrammarError(
                f"invalid sequence: command {first.index}: {first.message} "
                f"({len(report.failures)} failure(s) total)")

    bodies: list[ExtrusionBody] = []
    loops: list[tuple[Curve, ...]] = []
    current: list[Curve] = []
    pen = (0.0, 0.0)
    in_loop = False

    def close_current() -> None:
        nonlocal current, pen, in_loop
        if in_loop:
            if not current:
                raise GrammarError("loop has no curves")
            loops.append(tuple(current))
        current = []
        pen = (0.0, 0.0)
        in_loop = False

    for i, cmd in enumerate(seq):
        kind = cmd.kind
        if kind is CommandType.SOL:
            close_current()
            in_loop = True
        elif kind is CommandType.LINE:
            end = (cmd.params["x"], cmd.params["y"])
            current.append(LineSegment(pen, end))
            pen = end
        elif kind is CommandType.ARC:
            end = (cmd.params["x"], cmd.params["y"])
            current.append(ArcCurve(pen, end,
                                    sweep=cmd.params["alpha"] * TWO_PI,
                                    ccw=bool(int(cmd.params["f"]))))
            pen = end
        elif kind is CommandType.CIRCLE:
            current.append(CircleCurve((cmd.params["x"], cmd.params["y"]),
                                       cmd.params["r"]))
        elif kind is CommandType.EXTRUDE:
            close_current()
            if not loops:
                raise GrammarError(f"command {i}: extrusion without a profile")
            theta, phi, gamma = denormalize_angles(
                cmd.params["theta"], cmd.params["phi"], cmd.params["gamma"])
            frame = sketch_plane_frame(
                theta, phi, gamma,
                origin=(cmd.params["px"], cmd.params["py"], cmd.params["pz"]),
                scale=cmd.params["s"])
            bodies.append(ExtrusionBody(
                profile=Profile(tuple(loops)),
                frame=frame,
                e1=cmd.params["e1"],
                e2=cmd.params["e2"],
                kind=ExtrudeKind(int(cmd.params["u"])),
                op=BooleanOp(int(cmd.params["b"])),
            ))
            loops = []
        elif kind is CommandType.EOS:
            break

    if not bodies:
        raise GrammarError("sequence produced no bodies")
    return SolidModel(tuple(bodies))
