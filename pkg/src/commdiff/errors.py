"""Exception types shared across the toolkit.

The CLI maps these onto its exit-code contract: input problems (parsing,
ring/algebra mismatches, bad flags) are distinct from verification failures
and from an empty search within declared bounds.
"""


class CommDiffError(Exception):
    """Base class for all toolkit errors."""


class RingMismatchError(CommDiffError, TypeError):
    """Operands live in different coefficient rings."""


class AlgebraMismatchError(CommDiffError, TypeError):
    """Operands live in different operator algebras."""


class WindowError(CommDiffError):
    """A sequence value or chain entry was requested outside its window."""


class NoSolutionWithinBounds(CommDiffError):
    """The commutant search found no solution inside the given bounds."""


class SizeLimitError(CommDiffError):
    """A configured size cap (unknown count, escalation depth) was exceeded."""


class CurveExtractionError(CommDiffError):
    """A pair does not satisfy a hyperelliptic relation of the expected shape."""


class ChainConstructionError(CommDiffError):
    """Dressing-chain data is inconsistent (gamma collision, sign conflict, ...)."""


class PointError(CommDiffError):
    """A curve point hits a pole/zero where evaluation is not defined."""
