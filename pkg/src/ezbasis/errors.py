"""Exceptions shared across the package."""

from __future__ import annotations


class VerificationError(Exception):
    """An exact internal cross-check failed.

    Raised when two independent computations of the same quantity
    disagree, e.g. the two inversion algorithms, the two basis
    representation paths, or a pole catalog against the expansion it
    must match.  This always indicates a bug or corrupted data, never
    a bad argument, so it is not a ValueError.
    """


class SingularMatrixError(ValueError):
    """A matrix that must be invertible has a zero diagonal entry."""
