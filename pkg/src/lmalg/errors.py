"""Exception hierarchy shared by all modules."""


class LMAlgError(Exception):
    """Base class for every error raised by this package."""


class BoundError(LMAlgError, ValueError):
    """A configured size bound would be exceeded."""


class InvariantError(LMAlgError, ValueError):
    """A value violates the invariants of its type."""


class SignatureError(LMAlgError, ValueError):
    """An LM algebra has the wrong operation signature for the request."""


class PreconditionError(LMAlgError, ValueError):
    """An input does not satisfy the precondition of an operation."""


class VerificationError(LMAlgError, RuntimeError):
    """A checked postcondition failed.

    This always signals a bug in the construction, never a legitimate
    outcome for valid input.
    """
