"""Exact computations on finite set families.

Subpackages and modules:

* :mod:`xfam.core` -- sets, families, colorings and their operators
* :mod:`xfam.constructions` -- the named extremal families
* :mod:`xfam.formulas` -- exact closed-form bounds
* :mod:`xfam.oracles` -- exhaustive and branch-and-bound searches
"""

from .core import *  # noqa: F401,F403
from .core import __all__ as _core_all
from .errors import CapacityError, FormatError, ParameterError, UndefinedCoverError, XfamError

__version__ = "0.1.0"

__all__ = list(_core_all) + [
    "CapacityError",
    "FormatError",
    "ParameterError",
    "UndefinedCoverError",
    "XfamError",
]
