"""Hybrid backscatter / harvest-then-transmit D2D coverage toolkit.

Thin wrapper over the C++ core: parameter handling, the point-process and
channel samplers, the Monte Carlo estimator, and the spectral closed-form
coverage pipeline.
"""

from ._core import *  # noqa: F401,F403
from ._core import __all__ as _core_all

__all__ = list(_core_all)
