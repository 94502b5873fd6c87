"""
Domain errors raised by the qln engine.

Every error carries the library name the CLI prints next to the message.
"""


class QLNError(Exception):
    """Base class for all domain errors."""

    @property
    def name(self) -> str:
        return type(self).__name__


# Algebra and module construction

class NonPositiveSize(QLNError):
    """An algebra was requested with fewer than one vertex."""


class RelationOutOfRange(QLNError):
    """A relation vertex lies outside [2, n-1]."""


class VertexOutOfRange(QLNError):
    """A vertex index lies outside the algebra."""


class InvalidInterval(QLNError):
    """An interval is not a module over the algebra."""


class DuplicateSummand(QLNError):
    """A basic module was given the same summand twice."""


class ParseError(QLNError):
    """Serialized input could not be decoded."""


# Tilting theory

class NotMutable(QLNError):
    """The summand admits no left mutation."""


class MutationMismatch(QLNError):
    """Complement scan and approximation cokernel disagree."""


class SizeLimitExceeded(QLNError):
    """A brute-force strategy was asked to run above its size guard."""


class NotTilting(QLNError):
    """The module is not a tilting module."""


# Orders and quasi-hereditary structures

class NotAPartialOrder(QLNError):
    """A relation fails antisymmetry after closure."""


class NotQuasiHereditary(QLNError):
    """The order does not define a quasi-hereditary structure."""


class ExtractionFailed(QLNError):
    """No elimination order completes, or completed branches disagree."""


# Gluing

class NotATree(QLNError):
    """A Hasse diagram is not a binary tree in in-order position."""


class ApexOutOfRange(QLNError):
    """A bang block apex lies outside the block."""


class RangeMismatch(QLNError):
    """Orders or blocks do not meet where they are required to."""


class InadmissibleSequence(QLNError):
    """A local structure sequence violates an admissibility clause."""

    def __init__(self, clause: str, message: str):
        super().__init__(f"{clause}: {message}")
        self.clause = clause


class ClassificationFailed(QLNError):
    """The decomposition index of a tilting module is not unique."""
