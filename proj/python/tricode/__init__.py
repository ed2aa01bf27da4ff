"""Triorthogonal CSS codes, transversal-gate verification, and Toffoli-state
distillation analysis. Thin wrapper over the C++ core."""

from ._core import *  # noqa: F401,F403
from ._core import __version__  # noqa: F401
