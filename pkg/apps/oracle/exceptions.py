"""
Oracle errors.
"""

from apps.quaternions.exceptions import GInverseError


class InternalOracleFailure(GInverseError, AssertionError):
    """An oracle result failed its own defining equations."""


class UnknownSystem(GInverseError, KeyError):
    """No characterizing equation system of that name exists."""
