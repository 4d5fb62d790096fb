"""Exception types and size-cap configuration."""

import os

DEFAULT_ENUM_CAP = 14


class GraphError(ValueError):
    """Malformed graph input or an operation whose precondition fails."""


class CapExceeded(RuntimeError):
    """An exponential computation was refused because the input is too large."""


def enumeration_cap(cap=None):
    """Resolve the vertex cap for exhaustive enumerations.

    An explicit ``cap`` wins, then the ``FIXNUM_CAP`` environment variable,
    then :data:`DEFAULT_ENUM_CAP`.
    """
    if cap is not None:
        return int(cap)
    env = os.environ.get("FIXNUM_CAP")
    if env:
        return int(env)
    return DEFAULT_ENUM_CAP
