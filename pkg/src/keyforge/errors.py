"""Exception types raised across keyforge."""


class KeyforgeError(Exception):
    """Base class for all keyforge errors."""


class MissingPairError(KeyforgeError):
    """A dataset document has no matching key file, or vice versa."""


class EncodingError(KeyforgeError):
    """An input file is not valid UTF-8."""


class DegenerateDocumentError(KeyforgeError):
    """A document has too little content to be scored."""


class MissingResourceError(KeyforgeError):
    """A post-processing step was requested without its resource."""


class EmptyCorpusError(KeyforgeError):
    pass


class InsufficientDataError(KeyforgeError):
    pass


class UnknownLabelError(KeyforgeError, KeyError):
    pass


class ZeroBaselineError(KeyforgeError, ZeroDivisionError):
    """Relative improvement is undefined for a zero baseline."""
