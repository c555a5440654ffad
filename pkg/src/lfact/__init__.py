"""Exact Möbius functions and characteristic polynomials of finite lattices."""

from lfact.errors import LatticeError
from lfact.lattice import FiniteLattice, product
from lfact.poly import ExactPoly

__all__ = ["ExactPoly", "FiniteLattice", "LatticeError", "product"]
__version__ = "0.1.0"
