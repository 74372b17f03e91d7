"""Exact arithmetic for the dual bases psi_m(n) / n^m and their coefficient triangles."""

from .coefficients import CoeffTriangle, build_triangle
from .identities import IdentityReport, T, U
from .powersums import HyperSumQuery, hyper_sum_brute, hyper_sum_expansion
from .psi import psi, psi_general

__version__ = "0.1.0"
