"""Exception hierarchy shared by every module of the simulator."""


class HddLogicError(Exception):
    """Base class for all simulator errors."""


class InvalidArgumentError(HddLogicError, ValueError):
    pass


class OutOfRangeError(InvalidArgumentError):
    """A field amplitude cannot define a threshold angle."""


class MalformedDoublingError(HddLogicError, ValueError):
    """A doubled word has odd length or contains a mixed pair (10/01)."""


class GeometryError(HddLogicError, ValueError):
    """Train, track or word lengths are incompatible."""


class WeakEraseError(HddLogicError, ValueError):
    """The first pass is too weak to erase the track."""


class DesynchronizationError(HddLogicError):
    """A bit window produced a mixed (1,0) or (0,1) flag pair."""


class NonterminationError(HddLogicError, RuntimeError):
    pass


class TrackImageError(HddLogicError):
    """Base class for track image load failures."""


class MalformedImageError(TrackImageError):
    pass


class ImageVersionError(TrackImageError):
    pass


class CellCountError(TrackImageError):
    pass


class ProgramError(HddLogicError):
    """A program step failed; ``step`` is its zero-based index."""

    def __init__(self, step, cause):
        self.step = step
        self.cause = cause
        super().__init__(f"step {step}: {cause}")
