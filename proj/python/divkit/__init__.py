"""Sup-sums F-divergences, extended KL divergence, and t-entropy on finite spaces."""

from ._divkit import *  # noqa: F401,F403
from ._divkit import __doc__  # noqa: F401

__version__ = "0.1.0"
