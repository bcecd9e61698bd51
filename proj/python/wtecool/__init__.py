"""Screening model for waste-to-energy driven absorption cooling of data centers."""

from ._wtecool import *  # noqa: F401,F403
from ._wtecool import __version__  # noqa: F401
