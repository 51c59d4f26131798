"""Greedy decoding of network-style logits into a TokenMatrix."""

from __future__ import annotations

import numpy as np

from ..errors import NaNError, ShapeError
from .commands import PARAM_NAMES, QUANT_LEVELS, UNUSED, CommandType, USED_SLOTS
from .tokens import TokenMatrix

_N_TYPES = len(CommandType)
_N_PARAMS = len(PARAM_NAMES)


def decode_logits(cmd_logits: np.ndarray, param_logits: np.ndarray) -> TokenMatrix:
    """Argmax-decode per-row type and parameter logits.

    cmd_logits has shape (n_max, 6) and param_logits (n_max, 16, 256).
    Ties resolve to the lowest index. Rows from the first decoded EOS on
    are replaced by EOS padding; parameter slots the decoded type does not
    use are set to the UNUSED sentinel. If no row decodes to EOS the matrix
    is returned unpadded (downstream dequantization rejects it).
    """
    cmd_logits = np.asarray(cmd_logits, dtype=np.float64)
    param_logits = np.asarray(param_logits, dtype=np.float64)
    if cmd_logits.ndim != 2 or cmd_logits.shape[1] != _N_TYPES:
        raise ShapeError(
            f"cmd_logits must be (n_max, {_N_TYPES}), got {cmd_logits.shape}")
    n_max = cmd_logits.shape[0]
    if param_logits.shape != (n_max, _N_PARAMS, QUANT_LEVELS):
        raise ShapeError(
            f"param_logits must be ({n_max}, {_N_PARAMS}, {QUANT_LEVELS}), "
            f"got {param_logits.shape}")
    if not np.isfinite(cmd_logits).all() or not np.isfinite(param_logits).all():
        raise NaNError("logits contain non-finite entries")

    types = np.argmax(cmd_logits, axis=1).astype(np.int16)
    param_tokens = np.argmax(param_logits, axis=2).astype(np.int16)

    eos_rows = np.flatnonzero(types == int(CommandType.EOS))
    end = int(eos_rows[0]) if eos_rows.size else n_max

    out_types = np.full(n_max, int(CommandType.EOS), dtype=np.int16)
    out_params = np.full((n_max, _N_PARAMS), UNUSED, dtype=np.int16)
    for i in range(end):
        kind = CommandType(int(types[i]))
        out_types[i] = int(kind)
        for j in USED_SLOTS[kind]:
            out_params[i, j] = param_tokens[i, j]
    return TokenMatrix(out_types, out_params)
