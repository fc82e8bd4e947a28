"""
errors.py
Exception hierarchy for the enumerator engine
"""


class EnumeratorError(ValueError):
    """Base class cho mọi lỗi của engine"""


class CycleError(EnumeratorError):
    """Relations close into a cycle (i < ... < i)"""


class FlagError(EnumeratorError):
    """A block sequence is not a flag of ideals of its host poset"""


class SizeError(EnumeratorError):
    """Input exceeds the exhaustive-enumeration bounds"""


class WeightError(EnumeratorError):
    """Composition weight does not match the poset size"""


class ConnectivityError(EnumeratorError):
    """Operation requires a connected poset"""
