"""Exception hierarchy shared by every module."""


class QuadCoverError(Exception):
    """Base class; ``code`` is the machine-readable tag used by the CLI."""

    code = "error"


class RingMismatch(QuadCoverError):
    code = "ring_mismatch"


class NotInvertible(QuadCoverError):
    code = "not_invertible"


class Undecided(QuadCoverError):
    """The ring menu gives no decision procedure for the requested property."""

    code = "undecided"


class InvalidRing(QuadCoverError):
    code = "invalid_ring"


class NotSymmetric(QuadCoverError):
    code = "not_symmetric"


class NotAlternating(QuadCoverError):
    code = "not_alternating"


class PreconditionError(QuadCoverError):
    code = "precondition"


class VerificationError(QuadCoverError):
    """An identity that must hold by construction failed; indicates a bug."""

    code = "verification_failed"


class Cancelled(QuadCoverError):
    code = "cancelled"
