"""Semantic validation of command sequences.

Loops follow a pen model: each loop's curve chain starts at the sketch-local
origin (0,0) and every curve command moves the pen to its end point; the
chain must return to (0,0) within the closure tolerance. A Circle is a
closed curve on its own and must be the only curve of its loop.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from .commands import (
    BooleanOp,
    CadSequence,
    CommandType,
    ExtrudeKind,
)

# Exact-closure tolerance for freshly authored sequences; dequantized
# sequences should be validated with DEQUANT_CLOSURE_TOL instead, since
# quantization moves every coordinate by up to half a bin.
CLOSURE_TOL = 1e-6
DEQUANT_CLOSURE_TOL = 1.0 / 255.0

_DEGENERATE_TOL = 1e-12


class FailureCode(str, Enum):
    GRAMMAR = "grammar"
    OPEN_LOOP = "open_loop"
    DEGENERATE_CURVE = "degenerate_curve"
    ZERO_EXTRUSION = "zero_extrusion"
    NO_EXTRUSION = "no_extrusion"
    FIRST_OP_NOT_NEW_BODY = "first_op_not_new_body"

    def __str__(self) -> str:  # pragma: no cover - cosmetic
        return self.value


@dataclass(frozen=True)
class Failure:
    index: int
    code: FailureCode
    message: str


@dataclass(frozen=True)
class ValidationReport:
    valid: bool
    failures: tuple[Failure, ...]

    def __bool__(self) -> bool:
        return self.valid


class _LoopState:
    """Tracks the pen while walking one loop."""

    def __init__(self, sol_index: int) -> None:
        self.sol_index = sol_index
        self.pos = (0.0, 0.0)
        self.n_curves = 0
        self.is_circle = False


def validate(seq: CadSequence, closure_tol: float = CLOSURE_TOL) -> ValidationReport:
    """Check every grammar and geometry rule, reporting all violations.

    Always returns a report; never raises. Failure codes cover: command
    ordering, loops that do not close, degenerate curves, extrusions with
    zero active extent, sequences without any extrusion, and a first
    extrusion whose boolean op is not "new body".
    """
    failures: list[Failure] = []

    def fail(index: int, code: FailureCode, message: str) -> None:
        failures.append(Failure(index, code, message))

    loop: _LoopState | None = None
    pending_loops = 0          # closed loops since the last Extrude
    n_extrudes = 0

    def close_loop(at_index: int) -> None:
        nonlocal loop, pending_loops
        if loop is None:
            return
        if loop.n_curves == 0:
            fail(loop.sol_index, FailureCode.GRAMMAR,
                 "loop has no curve commands")
        elif not loop.is_circle:
            dx, dy = loop.pos
            if math.hypot(dx, dy) > closure_tol:
                fail(at_index, FailureCode.OPEN_LOOP,
                     f"loop starting at command {loop.sol_index} ends at "
                     f"({loop.pos[0]:.6g}, {loop.pos[1]:.6g}), not at its "
                     f"start point")
        pending_loops += 1
        loop = None

    for i, cmd in enumerate(seq):
        kind = cmd.kind
        if kind is CommandType.SOL:
            close_loop(i)
            loop = _LoopState(i)
        elif kind in (CommandType.LINE, CommandType.ARC, CommandType.CIRCLE):
            if loop is None:
                fail(i, FailureCode.GRAMMAR,
                     "curve command outside a loop (missing SOL)")
                loop = _LoopState(i)  # diagnose the rest of the chain anyway
            if loop.is_circle:
                fail(i, FailureCode.GRAMMAR,
                     "curve command after a Circle in the same loop")
            if kind is CommandType.CIRCLE:
                if loop.n_curves > 0:
                    fail(i, FailureCode.GRAMMAR,
                         "Circle must be the only curve of its loop")
                if cmd.params["r"] <= _DEGENERATE_TOL:
                    fail(i, FailureCode.DEGENERATE_CURVE, "zero-radius circle")
                loop.is_circle = True
            else:
                end = (cmd.params["x"], cmd.params["y"])
                chord = math.hypot(end[0] - loop.pos[0], end[1] - loop.pos[1])
                if kind is CommandType.LINE:
                    if chord <= _DEGENERATE_TOL:
                        fail(i, FailureCode.DEGENERATE_CURVE, "zero-length line")
                else:  # ARC
                    alpha = cmd.params["alpha"]
                    if alpha <= _DEGENERATE_TOL or alpha >= 1.0 - _DEGENERATE_TOL:
                        fail(i, FailureCode.DEGENERATE_CURVE,
                             "arc sweep must lie strictly between 0 and a full turn")
                    if chord <= _DEGENERATE_TOL:
                        fail(i, FailureCode.DEGENERATE_CURVE,
                             "arc endpoints coincide")
                loop.pos = end
            loop.n_curves += 1
        elif kind is CommandType.EXTRUDE:
            close_loop(i)
            if pending_loops == 0:
                fail(i, FailureCode.GRAMMAR,
                     "extrusion without a preceding sketch profile")
            u = ExtrudeKind(int(cmd.params["u"]))
            e1, e2 = cmd.params["e1"], cmd.params["e2"]
            active = e1 + e2 if u is ExtrudeKind.TWO_SIDED else e1
            if active <= _DEGENERATE_TOL:
                fail(i, FailureCode.ZERO_EXTRUSION,
                     f"extrusion has zero extent under extrude type {u.name}")
            if n_extrudes == 0 and int(cmd.params["b"]) != int(BooleanOp.NEW_BODY):
                fail(i, FailureCode.FIRST_OP_NOT_NEW_BODY,
                     "first extrusion must create a new body")
            n_extrudes += 1
            pending_loops = 0
        elif kind is CommandType.EOS:
            close_loop(i)
            if pending_loops > 0:
                fail(i, FailureCode.GRAMMAR,
                     f"{pending_loops} loop(s) after the last extrusion are "
                     f"never extruded")

    if n_extrudes == 0:
        fail(len(seq) - 1, FailureCode.NO_EXTRUSION,
             "sequence contains no extrusion")

    return ValidationReport(valid=not failures, failures=tuple(failures))
