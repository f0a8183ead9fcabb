"""Exceptions raised on mathematically invalid input.

All of them derive from :class:`SylvesterError`, which the command line
front end maps to exit code 3.
"""


class SylvesterError(ValueError):
    """Base class for invalid mathematical input."""


class NonzeroRemainder(SylvesterError):
    """Division by ``x - r`` where ``r`` is not a root."""


class IndexOutOfRange(SylvesterError):
    """An index (p, q, k, subset size, degree) lies outside its valid range."""


class NotMonic(SylvesterError):
    pass


class DuplicateRoots(SylvesterError):
    pass


class NegativeN(SylvesterError):
    pass


class Unordered(SylvesterError):
    """Raised when a routine that assumes ``m <= n`` receives ``m > n``."""


class BoundTooSmall(SylvesterError):
    pass
