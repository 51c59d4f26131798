"""JSON interchange for command sequences.

Document shape::

    {"commands": [{"type": "Circle", "params": {"x": 0.5, "y": 0.5, "r": 0.25}},
                  {"type": "EOS", "params": {}}, ...]}

Types with no parameters carry an empty params object. Floats are emitted
with repr precision, so serialize/parse round-trips are exact and the output
is byte-stable for a given sequence.
"""

from __future__ import annotations

import json
from typing import Any

from ..errors import GrammarError, RangeError, SchemaError
from .commands import (
    CadSequence,
    Command,
    CommandType,
    DISCRETE_SLOTS,
    JSON_TYPE_NAMES,
    TYPE_FROM_JSON,
    USED_PARAMS,
)


def sequence_to_dict(seq: CadSequence) -> dict[str, Any]:
    commands = []
    for cmd in seq:
        params = {name: cmd.params[name] for name in USED_PARAMS[cmd.kind]}
        commands.append({"type": JSON_TYPE_NAMES[cmd.kind], "params": params})
    return {"commands": commands}


def serialize_json(seq: CadSequence) -> str:
    return json.dumps(sequence_to_dict(seq), indent=2) + "\n"


def sequence_from_dict(doc: dict[str, Any]) -> CadSequence:
    if not isinstance(doc, dict) or "commands" not in doc:
        raise SchemaError('document must be an object with a "commands" list')
    raw = doc["commands"]
    if not isinstance(raw, list) or not raw:
        raise SchemaError('"commands" must be a non-empty list')

    commands: list[Command] = []
    for i, entry in enumerate(raw):
        if not isinstance(entry, dict):
            raise SchemaError(f"command {i} is not an object")
        tname = entry.get("type")
        if tname not in TYPE_FROM_JSON:
            raise SchemaError(f"command {i} has unknown type {tname!r}")
        kind = TYPE_FROM_JSON[tname]
        params = entry.get("params", {})
        if not isinstance(params, dict):
            raise SchemaError(f"command {i}: params must be an object")
        expected = USED_PARAMS[kind]
        if set(params.keys()) != set(expected):
            raise SchemaError(
                f"command {i} ({tname}): params must be exactly "
                f"{list(expected)}, got {sorted(params.keys())}")
        for name, value in params.items():
            if not isinstance(value, (int, float)) or isinstance(value, bool):
                raise SchemaError(
                    f"command {i} ({tname}): {name} must be a number")
            if name in DISCRETE_SLOTS and not isinstance(value, int):
                raise SchemaError(
                    f"command {i} ({tname}): {name} must be an integer")
        commands.append(Command(kind, dict(params)))  # may raise RangeError

    _check_grammar_order(commands)
    return CadSequence(tuple(commands))  # may raise GrammarError (EOS frame)


def _check_grammar_order(commands: list[Command]) -> None:
    """Reject command orderings the schema itself rules out.

    Only ordering is enforced here (a curve or extrusion before any SOL,
    EOS placement is handled by CadSequence). Semantic rules such as loop
    closure stay with validate(), which must be able to diagnose sequences
    produced by model decoding.
    """
    seen_sol = False
    for i, cmd in enumerate(commands):
        if cmd.kind is CommandType.SOL:
            seen_sol = True
        elif cmd.kind in (CommandType.LINE, CommandType.ARC, CommandType.CIRCLE):
            if not seen_sol:
                raise GrammarError(
                    f"command {i}: loop must begin with SOL before any curve")


def parse_json(text: str) -> CadSequence:
    """Parse a sequence document; raises SchemaError / GrammarError / RangeError."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"invalid JSON: {exc}") from exc
    return sequence_from_dict(doc)


__all__ = ["parse_json", "serialize_json", "sequence_to_dict", "sequence_from_dict"]
