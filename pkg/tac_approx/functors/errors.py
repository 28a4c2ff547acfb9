class FunctorError(Exception):
    """Base class for errors of the base change and forgetful functors."""


class NotTotallyAcyclicError(FunctorError):
    """A complex that should be totally acyclic has homology in the checked window."""


class InfiniteProjectiveDimensionError(FunctorError):
    """The quotient ring has no finite free resolution over the base ring."""
