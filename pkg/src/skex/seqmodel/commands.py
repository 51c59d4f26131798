"""Command vocabulary for sketch-and-extrude sequences.

A model is an ordered list of typed commands. Sketch commands (Line, Arc,
Circle) draw closed loops on a 2D plane in normalized [0,1] coordinates;
each loop starts with a SOL marker and its curve chain begins at the local
origin (0,0). An Extrude command lifts all loops accumulated since the
previous Extrude into a solid body and combines it with the model built so
far. EOS terminates the sequence.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import IntEnum

from ..errors import GrammarError, RangeError

# Hard cap on sequence length; sequences are padded to this when tokenized.
N_MAX = 60

# Number of quantization levels for continuous parameters (8-bit).
QUANT_LEVELS = 256

# Sentinel token for parameter slots a command type does not use.
UNUSED = -1


class CommandType(IntEnum):
    SOL = 0
    LINE = 1
    ARC = 2
    CIRCLE = 3
    EXTRUDE = 4
    EOS = 5


# Canonical order of the 16 parameter slots.
PARAM_NAMES: tuple[str, ...] = (
    "x", "y", "alpha", "f", "r",
    "theta", "phi", "gamma",
    "px", "py", "pz",
    "s", "e1", "e2", "b", "u",
)

PARAM_INDEX: dict[str, int] = {name: i for i, name in enumerate(PARAM_NAMES)}

# Discrete slots and their cardinality; every other slot is continuous in [0,1].
DISCRETE_SLOTS: dict[str, int] = {"f": 2, "b": 4, "u": 3}

USED_PARAMS: dict[CommandType, tuple[str, ...]] = {
    CommandType.SOL: (),
    CommandType.LINE: ("x", "y"),
    CommandType.ARC: ("x", "y", "alpha", "f"),
    CommandType.CIRCLE: ("x", "y", "r"),
    CommandType.EXTRUDE: ("theta", "phi", "gamma", "px", "py", "pz",
                          "s", "e1", "e2", "b", "u"),
    CommandType.EOS: (),
}

# Slot-index view of USED_PARAMS, handy for array code.
USED_SLOTS: dict[CommandType, tuple[int, ...]] = {
    kind: tuple(PARAM_INDEX[n] for n in names)
    for kind, names in USED_PARAMS.items()
}

JSON_TYPE_NAMES: dict[CommandType, str] = {
    CommandType.SOL: "SOL",
    CommandType.LINE: "Line",
    CommandType.ARC: "Arc",
    CommandType.CIRCLE: "Circle",
    CommandType.EXTRUDE: "Extrude",
    CommandType.EOS: "EOS",
}

TYPE_FROM_JSON: dict[str, CommandType] = {v: k for k, v in JSON_TYPE_NAMES.items()}


class BooleanOp(IntEnum):
    """Codes for the extrude boolean slot ``b``."""

    NEW_BODY = 0
    JOIN = 1
    CUT = 2
    INTERSECT = 3


class ExtrudeKind(IntEnum):
    """Codes for the extrude type slot ``u``."""

    ONE_SIDED = 0
    SYMMETRIC = 1
    TWO_SIDED = 2


def _check_param(kind: CommandType, name: str, value: float) -> float:
    if name in DISCRETE_SLOTS:
        iv = int(value)
        if iv != value or not 0 <= iv < DISCRETE_SLOTS[name]:
            raise RangeError(
                f"{JSON_TYPE_NAMES[kind]}.{name} must be an integer in "
                f"[0, {DISCRETE_SLOTS[name] - 1}], got {value!r}")
        return iv
    value = float(value)
    if not math.isfinite(value) or not 0.0 <= value <= 1.0:
        raise RangeError(
            f"{JSON_TYPE_NAMES[kind]}.{name} must lie in [0, 1], got {value!r}")
    return value


@dataclass(frozen=True)
class Command:
    """One typed command with exactly the parameter slots its type uses.

    ``params`` maps slot name to value. Continuous slots hold floats in
    [0,1]; discrete slots (f, b, u) hold small integer codes. Slots the
    type does not use are simply absent (they carry the UNUSED sentinel in
    tokenized form).
    """

    kind: CommandType
    params: dict[str, float] = field(default_factory=dict)

    def __post_init__(self) -> None:
        expected = USED_PARAMS[self.kind]
        got = tuple(self.params.keys())
        if set(got) != set(expected):
            raise RangeError(
                f"{JSON_TYPE_NAMES[self.kind]} takes params {list(expected)}, "
                f"got {sorted(got)}")
        ordered = {n: _check_param(self.kind, n, self.params[n]) for n in expected}
        object.__setattr__(self, "params", ordered)

    # -- constructors ----------------------------------------------------

    @classmethod
    def sol(cls) -> "Command":
        return cls(CommandType.SOL)

    @classmethod
    def eos(cls) -> "Command":
        return cls(CommandType.EOS)

    @classmethod
    def line(cls, x: float, y: float) -> "Command":
        return cls(CommandType.LINE, {"x": x, "y": y})

    @classmethod
    def arc(cls, x: float, y: float, alpha: float, f: int) -> "Command":
        return cls(CommandType.ARC, {"x": x, "y": y, "alpha": alpha, "f": f})

    @classmethod
    def circle(cls, x: float, y: float, r: float) -> "Command":
        return cls(CommandType.CIRCLE, {"x": x, "y": y, "r": r})

    @classmethod
    def extrude(cls, theta: float, phi: float, gamma: float,
                px: float, py: float, pz: float, s: float,
                e1: float, e2: float, b: int, u: int) -> "Command":
        return cls(CommandType.EXTRUDE, {
            "theta": theta, "phi": phi, "gamma": gamma,
            "px": px, "py": py, "pz": pz,
            "s": s, "e1": e1, "e2": e2, "b": b, "u": u,
        })

    # -- views ------------------------------------------------------------

    def slot_values(self) -> list[float | None]:
        """The 16-slot view; None marks unused slots."""
        out: list[float | None] = [None] * len(PARAM_NAMES)
        for name, value in self.params.items():
            out[PARAM_INDEX[name]] = value
        return out

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Command):
            return NotImplemented
        return self.kind == other.kind and self.params == other.params

    def __hash__(self) -> int:
        return hash((self.kind, tuple(sorted(self.params.items()))))


@dataclass(frozen=True)
class CadSequence:
    """An ordered, EOS-terminated command list.

    Construction enforces only the structural frame: non-empty, EOS last,
    nothing after EOS, length within N_MAX. Grammar-level rules (loop
    structure, closure, extrusion presence, ...) are deliberately left to
    ``validate`` so that decoded model output can be represented and then
    diagnosed.
    """

    commands: tuple[Command, ...]

    def __post_init__(self) -> None:
        cmds = tuple(self.commands)
        object.__setattr__(self, "commands", cmds)
        if not cmds:
            raise GrammarError("sequence must contain at least an EOS command")
        if len(cmds) > N_MAX:
            raise GrammarError(
                f"sequence has {len(cmds)} commands, cap is {N_MAX}")
        if cmds[-1].kind is not CommandType.EOS:
            raise GrammarError("sequence must end with EOS")
        for i, c in enumerate(cmds[:-1]):
            if c.kind is CommandType.EOS:
                raise GrammarError(f"EOS at index {i} is not last")

    def __len__(self) -> int:
        return len(self.commands)

    def __iter__(self):
        return iter(self.commands)

    def __getitem__(self, i):
        return self.commands[i]

    @classmethod
    def empty(cls) -> "CadSequence":
        return cls((Command.eos(),))
