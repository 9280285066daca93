"""Minimal discrete exponential families on finite sample spaces.

Decide when two presentations (C, F) define the same family, recover the
unique witness in the reparametrization group, and canonicalize a family to
an affine subspace of the function space modulo constants.
"""

from ._core import *  # noqa: F401,F403
from ._core import __version__  # noqa: F401
