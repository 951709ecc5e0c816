"""Exception hierarchy shared by all modules."""


class LinkQuandleError(Exception):
    """Base class for every error raised by this package."""


class DiagramInputError(LinkQuandleError, ValueError):
    """Input text or data could not be turned into a link diagram."""


class MalformedCode(DiagramInputError):
    pass


class InconsistentArcs(DiagramInputError):
    pass


class EmptyDiagram(DiagramInputError):
    pass


class InvalidSite(LinkQuandleError, ValueError):
    """A Reidemeister move was requested at a site where it does not apply."""


class SubsetNotClosed(LinkQuandleError, ValueError):
    pass


class SearchSpaceTooLarge(LinkQuandleError):
    pass


class TooFewGenerators(LinkQuandleError, ValueError):
    pass


class MissingGenerator(LinkQuandleError, KeyError):
    pass


class SolverError(LinkQuandleError):
    """Base for failures of the polynomial solver."""


class SolverStalled(SolverError):
    """Some candidate solutions could not be refined to the target residual.

    ``partial`` holds ``(vector, residual)`` pairs for everything that was
    found, refined or not.
    """

    def __init__(self, message, partial=()):
        super().__init__(message)
        self.partial = list(partial)


class PositiveDimensional(SolverError):
    """The solution set contains a curve (or higher-dimensional component)."""

    def __init__(self, message, free_variables=(), sample=None):
        super().__init__(message)
        self.free_variables = tuple(free_variables)
        self.sample = sample
