"""Exact mass formulas and brute-force verification for codes with prescribed hull dimension."""

from .code import LinearCode, dual, hull, hull_dimension
from .field import FieldSpec, gf, hermitian_field
from .formulas import CountQuery, CountReport, gaussian_binomial, group_order, hull_mass, mass
from .matrix import Matrix

__all__ = [
    "CountQuery",
    "CountReport",
    "FieldSpec",
    "LinearCode",
    "Matrix",
    "dual",
    "gaussian_binomial",
    "gf",
    "group_order",
    "hermitian_field",
    "hull",
    "hull_dimension",
    "hull_mass",
    "mass",
]
