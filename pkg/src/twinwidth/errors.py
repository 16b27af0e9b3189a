"""Exception hierarchy shared by every module."""


class TwinWidthError(ValueError):
    """Base class for all toolkit errors."""


class InvalidContractionError(TwinWidthError):
    pass


class InvalidSequenceError(TwinWidthError):
    pass


class ParameterError(TwinWidthError):
    pass


class RegularityError(ParameterError):
    pass


class DimensionError(ParameterError):
    pass


class RetryExhaustedError(TwinWidthError):
    pass


class NotIsomorphicError(TwinWidthError):
    """A supplied vertex correspondence does not carry the trigraph onto the graph."""


class FormatError(TwinWidthError):
    """Malformed edge-list, sequence or rotation-map text."""
