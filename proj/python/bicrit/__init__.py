"""Bicriteria submodular maximization: solvers, rounding, and test oracles."""

from ._core import *  # noqa: F401,F403
from ._core import __version__  # noqa: F401
