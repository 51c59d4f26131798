"""Exception hierarchy shared by all skex modules."""


class SkexError(Exception):
    """Base class for all toolkit errors."""


class SchemaError(SkexError):
    """Malformed sequence document (bad JSON, missing/unknown fields)."""


class GrammarError(SkexError):
    """Command ordering violates the sequence grammar."""


class RangeError(SkexError):
    """Parameter value outside its declared domain."""


class CodeError(SkexError):
    """Token matrix contains an out-of-range or inconsistent code."""


class ShapeError(SkexError):
    """Array argument has the wrong dimensions."""


class NaNError(SkexError):
    """Array argument contains non-finite entries."""


class ScaleError(SkexError):
    """Non-positive sketch scale."""


class DegenerateArcError(SkexError):
    """Arc with coincident endpoints or sweep outside (0, 2*pi)."""


class TessellationError(SkexError):
    """Profile cannot be tessellated/triangulated (open or self-intersecting)."""


class EmptySurfaceError(SkexError):
    """Surface sampling found no surviving boundary (e.g. fully cut model)."""


class EmptyCloudError(SkexError):
    """Point cloud operation received an empty cloud."""


class EmptyBatchError(SkexError):
    """Batch metric received an empty batch."""


class ArgumentError(SkexError):
    """Invalid argument combination."""


class PairingError(SkexError):
    """Prediction/ground-truth directories do not pair one-to-one."""
