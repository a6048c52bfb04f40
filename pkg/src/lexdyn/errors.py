"""Exception hierarchy shared across the package."""


class LexDynError(ValueError):
    """Base class for every error raised by lexdyn."""


class IngestError(LexDynError):
    def __init__(self, message, offset=None):
        super().__init__(message)
        self.offset = offset


class StatsError(LexDynError):
    pass


class FitError(LexDynError):
    pass


class CompareError(LexDynError):
    pass


class GenError(LexDynError):
    pass
