"""Exception hierarchy. Every error raised on purpose derives from FlagcombError."""


class FlagcombError(Exception):
    pass


class MalformedFaceError(FlagcombError, ValueError):
    """A face has repeated or invalid vertex labels."""


class NotAFaceError(FlagcombError, ValueError):
    pass


class GammaUndefinedError(FlagcombError, ValueError):
    """The h-vector is not symmetric, so no gamma-vector exists."""


class ParameterError(FlagcombError, ValueError):
    pass


class ClassError(FlagcombError, ValueError):
    """The input complex is outside the class an operation requires."""

    def __init__(self, message: str, check: str | None = None):
        super().__init__(message)
        self.check = check


class FormatError(FlagcombError, ValueError):
    """Unparseable .sc / .g input."""


class FlagcombWarning(UserWarning):
    pass
