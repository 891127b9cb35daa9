"""Iterated graph cylinders: exact spectra and their distributions."""

from ._core import *  # noqa: F401,F403
from ._core import __version__  # noqa: F401
