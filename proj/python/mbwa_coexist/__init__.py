"""Interference ceilings and coexistence checks for IEEE 802.20 (MBWA) terminals."""

from ._core import *  # noqa: F401,F403
from ._core import __version__  # noqa: F401
