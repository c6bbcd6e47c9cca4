#!/usr/bin/env python3
"""
SUPERCHAR - Exception Hierarchy
Every failure raised by the character library derives from SupercharError
"""


class SupercharError(Exception):
    """Base exception for character library errors"""
    pass


class PartitionConstraintError(SupercharError, ValueError):
    """A partition or (d, m, n) parameter violates an operation's precondition"""
    pass


class AlphabetMismatchError(SupercharError):
    """Series arithmetic attempted across incompatible variable layouts"""
    pass


class SeriesInversionError(SupercharError):
    """Geometric expansion requested for a monomial of zero capped degree"""
    pass


class NonDominantWeightError(SupercharError):
    """Weight is not dominant integral for the requested root system"""
    pass


class IdentityParameterError(SupercharError):
    """Unknown identity id, or parameters not valid for that identity"""
    pass


class LogicFault(SupercharError):
    """Internal consistency check failed (a bug, never a user error)"""
    pass


class OperatorIndexError(SupercharError, ValueError):
    """Differential operator requested with indices outside the variable ranges"""
    pass
