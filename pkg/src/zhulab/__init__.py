"""Exact computations with Zhu algebras A_n(V) and bimodules A_{n,m}(V) of
truncated Heisenberg and Virasoro vertex operator algebras."""

__version__ = "0.1.0"

from .linalg import Echelon, Q, echelonize, fmt_rational, parse_rational
from .voa import HEISENBERG, VIRASORO, VOA, CutoffExceeded, verify_singular
from .expr import ParseError, format_vector, parse_vector
from .products import circ_n, circ_nm, o_shift_gen, res_pow, star_n, star_tri
from .quotients import (algebra_on_quotient, bimodule_on_quotient, span_o_n, span_o_nm,
                        truncated_quotient)
from .algebra import FiniteAlgebra, is_semisimple, rational_eigenvalues
from .modules import fock, verma

__all__ = [
    "Echelon", "Q", "echelonize", "fmt_rational", "parse_rational",
    "HEISENBERG", "VIRASORO", "VOA", "CutoffExceeded", "verify_singular",
    "ParseError", "format_vector", "parse_vector",
    "circ_n", "circ_nm", "o_shift_gen", "res_pow", "star_n", "star_tri",
    "algebra_on_quotient", "bimodule_on_quotient", "span_o_n", "span_o_nm", "truncated_quotient",
    "FiniteAlgebra", "is_semisimple", "rational_eigenvalues",
    "fock", "verma",
]
