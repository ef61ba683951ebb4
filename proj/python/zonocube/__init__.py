"""Python access to the zonocube core library.

Color sets are tuples of increasing positive ints; any iterable of ints is accepted as input.
"""

from ._core import *  # noqa: F401,F403
from ._core import Cubillage, CorruptInput, MalformedInput, NotRealizable, Refused, Unsupported

__all__ = [name for name in dir() if not name.startswith("_")]
