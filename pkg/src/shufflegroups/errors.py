"""Exception types shared across the package."""


class ShuffleGroupError(Exception):
    """Base class for all errors raised by shufflegroups."""


class InvalidDegreeError(ShuffleGroupError, ValueError):
    """A permutation degree is out of range or a dest list is not a bijection."""


class DegreeMismatchError(ShuffleGroupError, ValueError):
    """Two operands act on decks of different sizes."""


class ParameterError(ShuffleGroupError, ValueError):
    """Deck or shuffle parameters violate their constraints."""


class ResourceLimitError(ShuffleGroupError, RuntimeError):
    """A computation would exceed a configured size cap."""
