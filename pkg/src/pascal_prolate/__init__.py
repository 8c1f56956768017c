"""Exact computations around the eigenvalue-1 eigenvector of the symmetric
Pascal matrix: its generating function, the commuting operators, and its
congruences with point counts on Legendre elliptic curves."""

from .genfun import gen_poly, theorem_A_poly, theorem_A_vector
from .operators import binomial_apply, jacobi_apply, pascal_apply
from .poly import DensePoly
from .ring import ModInt, binomial, legendre_symbol, pochhammer

__all__ = [
    "DensePoly",
    "ModInt",
    "binomial",
    "binomial_apply",
    "gen_poly",
    "jacobi_apply",
    "legendre_symbol",
    "pascal_apply",
    "pochhammer",
    "theorem_A_poly",
    "theorem_A_vector",
]
