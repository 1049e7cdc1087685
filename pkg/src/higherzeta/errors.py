"""Exception taxonomy shared by every module.

All failures raised by this package derive from HigherZetaError, so callers
can catch one base class.  The CLI maps parse-type errors to exit code 2 and
math-domain errors to exit code 3.
"""

from __future__ import annotations


class HigherZetaError(Exception):
    """Base class for all errors raised by this package."""

    kind = "error"


class DomainError(HigherZetaError):
    """Argument outside the mathematical domain of the operation."""

    kind = "domain"


class PoleError(HigherZetaError):
    """Evaluation requested exactly at a pole."""

    kind = "pole"


class NearPoleError(HigherZetaError):
    """Evaluation within the guard distance of a pole, where the
    continuation formula amplifies rounding."""

    kind = "nearpole"


class ShapeError(HigherZetaError):
    """Incompatible truncation orders or array shapes."""

    kind = "shape"


class CapacityError(HigherZetaError):
    """An enumeration or table would exceed its configured size cap."""

    kind = "capacity"


class UnsupportedError(HigherZetaError):
    """The requested combination has no supported representation."""

    kind = "unsupported"


class ContinuationError(HigherZetaError):
    """The Laurent structure needed for continuation could not be resolved."""

    kind = "continuation"


class TruncationError(HigherZetaError):
    """A truncation certificate cannot reach the requested accuracy."""

    kind = "truncation"


class DivergenceError(HigherZetaError):
    """No convergent split exists; the input violates the growth condition."""

    kind = "divergence"


class ParseError(HigherZetaError):
    """Malformed textual input (sequence grammar, zero tables, numbers)."""

    kind = "parse"


class OrderError(HigherZetaError):
    """Input data that must be ascending is not."""

    kind = "order"
