"""
Three-way zero tests with a guard band.
Created by Sergie Code
"""

from enum import Enum

from config import Config


class ZeroState(Enum):
    ZERO = 'zero'
    NONZERO = 'nonzero'
    AMBIGUOUS = 'ambiguous'


def zero_state(value, tol=None):
    """
    Decide whether a real condition value vanishes.

    |value| < tol is zero, |value| >= GUARD_BAND_FACTOR * tol is nonzero and
    anything in between is ambiguous.
    """
    tol = Config.ZERO_TOLERANCE if tol is None else tol
    magnitude = abs(value)
    if magnitude < tol:
        return ZeroState.ZERO
    if magnitude >= Config.GUARD_BAND_FACTOR * tol:
        return ZeroState.NONZERO
    return ZeroState.AMBIGUOUS
