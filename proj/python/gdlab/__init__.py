"""Exact verification kernel for Gel'fand-Dorfman (bi)algebras.

Thin wrapper over the C++ core; see the project README for the data model.
"""

from ._core import *  # noqa: F401,F403
from ._core import __doc__ as _core_doc  # noqa: F401

__all__ = [name for name in dir() if not name.startswith("_")]
