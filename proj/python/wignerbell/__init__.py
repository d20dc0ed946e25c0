"""Wigner-form Bell inequality: population counting, entropy, and singlet sampling."""

from ._core import *  # noqa: F401,F403
from ._core import __version__  # noqa: F401
