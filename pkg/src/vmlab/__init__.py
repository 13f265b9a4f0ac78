"""Virtual metrology lab: simulated measuring instruments with exact readings."""

from vmlab.model import (
    ALL_KINDS,
    ExactValue,
    InstrumentKind,
    InstrumentSpec,
    LabError,
    MalformedAnswerError,
    OutOfRangeError,
    SpecError,
    TickPosition,
    Unit,
    default_spec,
    format_value,
    parse_answer,
    ticks_to_value,
)

__version__ = "0.1.0"

__all__ = [
    "ALL_KINDS",
    "ExactValue",
    "InstrumentKind",
    "InstrumentSpec",
    "LabError",
    "MalformedAnswerError",
    "OutOfRangeError",
    "SpecError",
    "TickPosition",
    "Unit",
    "default_spec",
    "format_value",
    "parse_answer",
    "ticks_to_value",
    "__version__",
]
