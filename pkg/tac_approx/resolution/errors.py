class ResolutionError(Exception):
    """Base class for all resolution errors."""


class LiftError(ResolutionError):
    """A comparison map or homotopy could not be lifted through a complex that should be exact."""


class PeriodicityNotFoundError(ResolutionError):
    """A resolution did not become periodic within the allowed length."""


class SpliceError(ResolutionError):
    """Splicing a resolution with a dual resolution did not produce an exact complex."""
