class CrucialError(Exception):
    """Base class for errors raised by crucialperm."""


class InvalidInputError(CrucialError, ValueError):
    """Malformed permutation, tableau, shape or out-of-range index."""


class UnsupportedError(CrucialError, ValueError):
    """Parameters outside the range where a construction or formula is known."""


class BruteForceCapError(CrucialError):
    """Brute-force enumeration was asked to go beyond the configured length cap."""
