# errors.py

"""
Witt Automorphism Toolkit - Errors File

This file defines the named exceptions raised by the library modules.
Every error carries its class name as `.name`, which the CLI prints on
standard error and the HTTP API returns in its JSON error body.
"""


class WittError(Exception):
    """Base class for every domain error raised by the toolkit."""

    def __init__(self, message=''):
        super().__init__(message)
        self.message = message

    @property
    def name(self):
        """The error name reported to users (the class name)."""
        return type(self).__name__

    def __str__(self):
        return self.message or self.name


# --- Kernel errors ---
class DimensionError(WittError):
    """Two values of different dimension n were combined."""


class NotUnimodular(WittError):
    """An integer matrix has determinant other than +1 or -1."""


class NotAUnit(WittError):
    """A ring-map image is not a nonzero scalar times a single monomial."""


# --- Witt algebra errors ---
class ZeroElement(WittError):
    """An operation that needs a nonzero element received zero."""


class NotHomogeneous(WittError):
    """An operation that needs a single support point received more."""


class UnsupportedDimension(WittError):
    """The requested computation is only implemented for small n."""


class LocallyFinite(WittError):
    """A non-finiteness witness was requested for an element of the Cartan subalgebra."""


# --- Automorphism recovery errors ---
class NotCartanPreserving(WittError):
    """An image of some H_i does not lie in the Cartan subalgebra."""


class NotDiagonalizable(WittError):
    """The images of the partials are inconsistent with every (A, lambda)."""


# --- Extension errors ---
class NotLiftable(WittError):
    """No automorphism of the extension projects to the given one."""


class UniquenessViolation(WittError):
    """A lift that must be unique was found to have a free parameter."""


class NotCentral(WittError):
    """A subspace that must be central is not."""


class NotAutomorphism(WittError):
    """A matrix does not define a Lie algebra automorphism."""


class InvalidStructureConstants(WittError):
    """Structure constants fail antisymmetry or the Jacobi identity."""


# --- Text input errors ---
class ParseError(WittError):
    """Malformed text input; `position` is the 0-based offending column."""

    def __init__(self, message, position=0):
        super().__init__(f'{message} (at position {position})')
        self.position = position
