"""Cops and robbers on finite reflexive graphs."""

from ._core import *  # noqa: F401,F403
from ._core import __version__  # noqa: F401
