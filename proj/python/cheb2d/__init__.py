"""Bivariate deformations of the Chebyshev polynomials of the second kind."""

from ._cheb2d import *  # noqa: F401,F403
from ._cheb2d import Cheb2dError, Family, __doc__  # noqa: F401
