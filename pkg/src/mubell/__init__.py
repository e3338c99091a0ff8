"""Exact constructions of mutually unbiased bases and generalized Bell bases over GF(p^n)."""

from .cyclotomic import CycInt, ScaledMatrix, ScaledValue, ScaledVector
from .galois import (
    BasisSpec,
    FieldElement,
    FieldError,
    GaloisField,
    dual_basis,
    find_irreducible,
    find_selfdual,
    galois_field,
    normal_basis,
    polynomial_basis,
)
from .pauli import PauliMonomial, lambda_class, lambda_tilde, to_matrix, x_op, z_op
from .mub import ConstructionError, mub_table
from .bell import BellLabel, BellState, Psi, PsiTilde, bell_from_lambda, bell_state, bell_tilde, full_basis

__version__ = "0.1.0"

__all__ = [
    "BasisSpec",
    "BellLabel",
    "BellState",
    "ConstructionError",
    "CycInt",
    "FieldElement",
    "FieldError",
    "GaloisField",
    "PauliMonomial",
    "Psi",
    "PsiTilde",
    "ScaledMatrix",
    "ScaledValue",
    "ScaledVector",
    "bell_from_lambda",
    "bell_state",
    "bell_tilde",
    "dual_basis",
    "find_irreducible",
    "find_selfdual",
    "full_basis",
    "galois_field",
    "lambda_class",
    "lambda_tilde",
    "mub_table",
    "normal_basis",
    "polynomial_basis",
    "to_matrix",
    "x_op",
    "z_op",
]
