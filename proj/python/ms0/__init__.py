"""Finite matroids, MS0 model checking, gain graphs and amalgams."""

from ._core import *  # noqa: F401,F403
