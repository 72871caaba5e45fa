"""Exact Hopf-cyclic and Hopf-dihedral (co)homology workbench."""

from .scalars import Scalar, QParam, make_qparam, parse_rational, parse_scalar

__all__ = ["Scalar", "QParam", "make_qparam", "parse_rational", "parse_scalar"]
__version__ = "0.1.0"
