"""
Exception classes for the `walk` namespace.
"""


class WalkValueError(ValueError):
    """Invalid argument to a walk operation."""


class CapacityError(RuntimeError):
    """The requested evolution does not fit the allocated lattice."""
