"""Sketch-and-extrude command sequences: types, parsing, tokens, validation."""

from .commands import (
    N_MAX,
    PARAM_NAMES,
    QUANT_LEVELS,
    UNUSED,
    BooleanOp,
    CadSequence,
    Command,
    CommandType,
    DISCRETE_SLOTS,
    ExtrudeKind,
    USED_PARAMS,
    USED_SLOTS,
)
from .decode import decode_logits
from .serialization import parse_json, serialize_json, sequence_from_dict, sequence_to_dict
from .tokens import TokenMatrix, dequantize, dequantize_value, quantize, quantize_value
from .validate import (
    CLOSURE_TOL,
    DEQUANT_CLOSURE_TOL,
    Failure,
    FailureCode,
    ValidationReport,
    validate,
)

__all__ = [
    "N_MAX", "PARAM_NAMES", "QUANT_LEVELS", "UNUSED",
    "BooleanOp", "CadSequence", "Command", "CommandType",
    "DISCRETE_SLOTS", "ExtrudeKind", "USED_PARAMS", "USED_SLOTS",
    "decode_logits",
    "parse_json", "serialize_json", "sequence_from_dict", "sequence_to_dict",
    "TokenMatrix", "dequantize", "dequantize_value", "quantize", "quantize_value",
    "CLOSURE_TOL", "DEQUANT_CLOSURE_TOL",
    "Failure", "FailureCode", "ValidationReport", "validate",
]
