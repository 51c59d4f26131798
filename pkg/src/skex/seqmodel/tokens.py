"""Quantized token form of a command sequence.

Continuous parameters in [0,1] are mapped onto 256 uniform levels with
round-half-away-from-zero; discrete slots keep their integer codes; unused
slots carry the sentinel -1. Sequences are padded with EOS rows to N_MAX.
"""

from __future__ import annotations

import hashlib
import struct
from dataclasses import dataclass

import numpy as np

from ..errors import CodeError, RangeError
from .commands import (
    N_MAX,
    PARAM_NAMES,
    QUANT_LEVELS,
    UNUSED,
    CadSequence,
    Command,
    CommandType,
    DISCRETE_SLOTS,
    USED_PARAMS,
)

_MAGIC = b"SKEX"
_VERSION = 1
_N_PARAMS = len(PARAM_NAMES)


@dataclass(frozen=True)
class TokenMatrix:
    """Fixed-size integer encoding: a type index and 16 param tokens per row."""

    types: np.ndarray   # (n_max,) int16, values 0..5
    params: np.ndarray  # (n_max, 16) int16, values -1..255

    def __post_init__(self) -> None:
        types = np.ascontiguousarray(self.types, dtype=np.int16)
        params = np.ascontiguousarray(self.params, dtype=np.int16)
        if types.ndim != 1 or params.shape != (types.shape[0], _N_PARAMS):
            raise CodeError(
                f"inconsistent token shapes {types.shape} / {params.shape}")
        types.flags.writeable = False
        params.flags.writeable = False
        object.__setattr__(self, "types", types)
        object.__setattr__(self, "params", params)

    @property
    def n_max(self) -> int:
        return int(self.types.shape[0])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TokenMatrix):
            return NotImplemented
        return (np.array_equal(self.types, other.types)
                and np.array_equal(self.params, other.params))

    def __hash__(self) -> int:
        return hash(self.to_bytes())

    # -- binary interchange ------------------------------------------------

    def to_bytes(self) -> bytes:
        """Little-endian binary form: 'SKEX', u16 version, u16 n_max, rows."""
        out = bytearray()
        out += _MAGIC
        out += struct.pack("<HH", _VERSION, self.n_max)
        for i in range(self.n_max):
            out += struct.pack("<B", int(self.types[i]))
            out += struct.pack(f"<{_N_PARAMS}h", *(int(v) for v in self.params[i]))
        return bytes(out)

    @classmethod
    def from_bytes(cls, data: bytes) -> "TokenMatrix":
        if data[:4] != _MAGIC:
            raise CodeError("bad magic, not a SKEX token file")
        version, n_max = struct.unpack_from("<HH", data, 4)
        if version != _VERSION:
            raise CodeError(f"unsupported token file version {version}")
        row_size = 1 + 2 * _N_PARAMS
        expected = 8 + n_max * row_size
        if len(data) != expected:
            raise CodeError(
                f"token file has {len(data)} bytes, expected {expected}")
        types = np.empty(n_max, dtype=np.int16)
        params = np.empty((n_max, _N_PARAMS), dtype=np.int16)
        off = 8
        for i in range(n_max):
            types[i] = data[off]
            params[i] = struct.unpack_from(f"<{_N_PARAMS}h", data, off + 1)
            off += row_size
        return cls(types, params)

    def digest(self) -> str:
        """Canonical content digest (sha256 of the binary form)."""
        return hashlib.sha256(self.to_bytes()).hexdigest()


def _eos_row() -> np.ndarray:
    return np.full(_N_PARAMS, UNUSED, dtype=np.int16)


def quantize_value(v: float) -> int:
    """Map v in [0,1] to a level in 0..255, rounding half away from zero."""
    if not 0.0 <= v <= 1.0:
        raise RangeError(f"continuous parameter {v!r} outside [0, 1]")
    return int(np.floor(v * (QUANT_LEVELS - 1) + 0.5))


def dequantize_value(token: int) -> float:
    return token / (QUANT_LEVELS - 1)


def quantize(seq: CadSequence, n_max: int = N_MAX) -> TokenMatrix:
    """Tokenize a sequence, padding with EOS rows up to ``n_max``.

    Raises RangeError if any continuous parameter falls outside [0,1]
    (Command construction already guarantees this for well-typed input).
    """
    if len(seq) > n_max:
        raise RangeError(f"sequence length {len(seq)} exceeds n_max={n_max}")
    types = np.full(n_max, int(CommandType.EOS), dtype=np.int16)
    params = np.tile(_eos_row(), (n_max, 1))
    for i, cmd in enumerate(seq):
        types[i] = int(cmd.kind)
        for name, value in cmd.params.items():
            j = PARAM_NAMES.index(name)
            if name in DISCRETE_SLOTS:
                params[i, j] = int(value)
            else:
                params[i, j] = quantize_value(float(value))
    return TokenMatrix(types, params)


def dequantize(tokens: TokenMatrix) -> CadSequence:
    """Invert ``quantize``: strip EOS padding, map tokens back to commands.

    Raises CodeError for out-of-range type indices or codes, for used/unused
    sentinel placement that contradicts the row type, and for matrices with
    no EOS row at all (such matrices cannot come from a valid sequence).
    """
    types = tokens.types
    eos_rows = np.flatnonzero(types == int(CommandType.EOS))
    if eos_rows.size == 0:
        raise CodeError("token matrix has no EOS row")
    end = int(eos_rows[0])

    commands: list[Command] = []
    for i in range(end + 1):
        t = int(types[i])
        if not 0 <= t <= 5:
            raise CodeError(f"row {i}: type index {t} out of range")
        kind = CommandType(t)
        used = USED_PARAMS[kind]
        row = tokens.params[i]
        params: dict[str, float] = {}
        for j, name in enumerate(PARAM_NAMES):
            tok = int(row[j])
            if name in used:
                if tok == UNUSED:
                    raise CodeError(f"row {i}: used slot {name} is unset")
                if name in DISCRETE_SLOTS:
                    if not 0 <= tok < DISCRETE_SLOTS[name]:
                        raise CodeError(
                            f"row {i}: discrete code {name}={tok} out of range")
                    params[name] = tok
                else:
                    if not 0 <= tok < QUANT_LEVELS:
                        raise CodeError(
                            f"row {i}: token {name}={tok} out of range")
                    params[name] = dequantize_value(tok)
            elif tok != UNUSED:
                raise CodeError(f"row {i}: unused slot {name} holds {tok}")
        commands.append(Command(kind, params))
    return CadSequence(tuple(commands))
