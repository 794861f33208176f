"""Exception types raised by the gbpe library."""


class GbpeError(Exception):
    """Base class for all gbpe errors."""


class IngestionError(GbpeError):
    """Input text could not be decoded as UTF-8."""


class EmptyCorpusError(GbpeError):
    """The ingested corpus contains zero tokens."""


class NoCandidatesError(GbpeError):
    """No scored candidate pairs were supplied for selection."""


class CodesParseError(GbpeError):
    """A codes file is malformed, truncated, or has an unknown version."""


class MarkerCollisionError(GbpeError):
    """An input word already contains the continuation marker."""


class AlignmentError(GbpeError):
    """Original and segmented text do not line up."""
