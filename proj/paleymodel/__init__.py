"""Random multiplicative sign models, sum graphs, and clique experiments."""

from ._paley import *  # noqa: F401,F403
from ._paley import __doc__ as _core_doc  # noqa: F401
