"""Terrestrial/stratospheric data-center simulator.

Thin wrapper over the compiled ``_hapdc`` core; everything public lives there.
"""

from ._hapdc import *  # noqa: F401,F403
from ._hapdc import __doc__ as _core_doc

__all__ = [name for name in dir() if not name.startswith("_")]
__doc__ = _core_doc or __doc__
