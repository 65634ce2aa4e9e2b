"""Exception types shared across the package.

Construction and input problems raise plain ``ValueError`` (or the
``ParseError`` subclass when a textual token is to blame).  The remaining
types exist so callers, in particular the command line front end, can tell
a violated precondition apart from an internal guard tripping.
"""


class ParseError(ValueError):
    """A textual input (link expression or graph file) failed to parse."""


class NotNegativeDefiniteError(ValueError):
    """An operation that requires a negative definite form received one that is not."""


class StepLimitError(RuntimeError):
    """The step guard of an iterative algorithm fired; indicates a caller bug."""


class TruncationNotFoundError(RuntimeError):
    """No prefix truncation with r0 + s0 = 1 exists although the precondition held.

    This can only happen if a guaranteed combinatorial invariant fails, so it
    is treated as an internal error, never as a normal result.
    """
