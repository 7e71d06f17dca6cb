"""Decision trees, acyclic decision graphs and path simulators for rule systems."""
from .core import (
    ALL_KINDS,
    STAR,
    DrsError,
    Limits,
    ProblemKind,
    Rule,
    RuleSystem,
    TooLargeError,
    ValueTuple,
    realizable,
    stats,
    tuples,
)
from .textio import ParseError, parse, serialize, size_of

__version__ = "0.1.0"

__all__ = [
    "ALL_KINDS", "STAR", "DrsError", "Limits", "ProblemKind", "Rule", "RuleSystem",
    "TooLargeError", "ValueTuple", "realizable", "stats", "tuples",
    "ParseError", "parse", "serialize", "size_of",
]
