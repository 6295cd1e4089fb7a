"""Exceptions shared across the package."""

from __future__ import annotations


class SkewInvError(Exception):
    """Base class for all package-specific errors."""


class ParameterError(SkewInvError, ValueError):
    """Invalid parameters (bad group data, malformed series input, ...)."""


class CycloDivisionError(SkewInvError, ZeroDivisionError):
    """Division by zero in a cyclotomic field."""


class InvalidAutomorphismError(SkewInvError, ValueError):
    """A matrix is not a graded automorphism of the given algebra."""


class InfiniteOrderError(SkewInvError, ValueError):
    """An automorphism of infinite order where a finite one is required."""


class InternalInconsistencyError(SkewInvError, RuntimeError):
    """Two computation paths that must agree disagreed (corresponds to CLI exit 2)."""
