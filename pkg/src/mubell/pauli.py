"""Generalized Pauli group over GF(p^n).

Every group element is kept symbolically as ``w_M^t Z_mu X_nu`` (Z before X),
where

    X_nu |lam> = |lam + nu>,      Z_mu |lam> = chi(mu lam) |lam>,

and composition uses the Weyl relation ``Z_mu X_nu = chi(mu nu) X_nu Z_mu``.
Phases live in a single conductor per field: p for odd p, 4 for p = 2.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .cyclotomic import CycInt, ScaledMatrix, root_power
from .galois import BasisSpec, FieldElement, FieldError, GaloisField, expand, galois_field


def conductor_for(p: int) -> int:
    """Cyclotomic conductor used for characteristic p."""
    return 4 if p == 2 else p


@dataclass(frozen=True)
class PauliMonomial:
    """The operator ``w_M^phase * Z_z * X_x``."""

    field: GaloisField
    phase: int
    z: FieldElement
    x: FieldElement

    def __post_init__(self):
        object.__setattr__(self, "phase", self.phase % self.conductor)

    @property
    def conductor(self) -> int:
        return conductor_for(self.field.p)

    def __matmul__(self, other: PauliMonomial) -> PauliMonomial:
        return compose(self, other)

    def adjoint(self) -> PauliMonomial:
        # (Z_m X_n)^+ = X_{-n} Z_{-m} = chi(-m n) Z_{-m} X_{-n}
        f = self.field
        shift = f.character_exponent(-(self.z * self.x), self.conductor)
        return PauliMonomial(f, -self.phase + shift, -self.z, -self.x)

    def is_identity(self) -> bool:
        return self.phase == 0 and not self.z and not self.x

    def phase_value(self) -> CycInt:
        return root_power(self.conductor, self.phase)

    def __str__(self) -> str:
        z = ",".join(str(c) for c in self.z.coeffs)
        x = ",".join(str(c) for c in self.x.coeffs)
        return f"w^{self.phase} Z[{z}] X[{x}]"


def identity(field: GaloisField) -> PauliMonomial:
    return PauliMonomial(field, 0, field.zero, field.zero)


def x_op(mu: FieldElement) -> PauliMonomial:
    f = mu.field
    return PauliMonomial(f, 0, f.zero, mu)


def z_op(mu: FieldElement) -> PauliMonomial:
    f = mu.field
    return PauliMonomial(f, 0, mu, f.zero)


def _same_field(a: PauliMonomial, b: PauliMonomial) -> GaloisField:
    if a.field != b.field:
        raise FieldError("monomials over different fields")
    return a.field


def compose(a: PauliMonomial, b: PauliMonomial) -> PauliMonomial:
    """Normal-ordered product a*b."""
    f = _same_field(a, b)
    # moving X_{x_a} past Z_{z_b}: X_n Z_m = chi(-m n) Z_m X_n
    shift = f.character_exponent(-(a.x * b.z), a.conductor)
    return PauliMonomial(f, a.phase + b.phase + shift, a.z + b.z, a.x + b.x)


def commutes(a: PauliMonomial, b: PauliMonomial) -> bool:
    _same_field(a, b)
    return (a.x * b.z).trace() == (b.x * a.z).trace()


def lambda_class(mu: FieldElement, nu: FieldElement) -> PauliMonomial:
    """Lambda(mu, nu) = Z_mu X_{nu mu}; mu = 0 is admitted (gives the identity)."""
    return PauliMonomial(mu.field, 0, mu, nu * mu)


def lambda_tilde(mu: FieldElement) -> PauliMonomial:
    """The conjugate-class operator X_mu."""
    return x_op(mu)


def to_matrix(a: PauliMonomial) -> ScaledMatrix:
    """Dense matrix in the field enumeration order of the computational basis."""
    f = a.field
    m = a.conductor
    q = f.q
    data = np.zeros((q, q, m), dtype=np.int64)
    for col, lam in enumerate(f.enumeration):
        target = lam + a.x
        k = a.phase + f.character_exponent(a.z * target, m)
        data[f.index(target), col, k % m] = 1
    return ScaledMatrix(f.p, m, data)


def hs_trace_inner(a: PauliMonomial, b: PauliMonomial) -> CycInt:
    """Tr[a b^+], evaluated symbolically."""
    c = compose(a, b.adjoint())
    if c.z or c.x:
        return CycInt(c.conductor, [])
    return c.phase_value() * c.field.q


# ---------------------------------------------------------------------------
# tensor factorization in a (almost) self-dual basis
# ---------------------------------------------------------------------------


def tensor_permutation(basis: BasisSpec) -> list[int]:
    """Map field-enumeration index -> index in the n-qudit product layout.

    The product layout is |l_1 ... l_n> with l_j the coordinates in ``basis``
    and qudit 1 most significant; each digit uses the GF(p) enumeration order.
    """
    f = basis.field
    prime = galois_field(f.p)
    perm = []
    for lam in f.enumeration:
        idx = 0
        for c in expand(lam, basis):
            idx = idx * f.p + prime.index(prime.from_int(c))
        perm.append(idx)
    return perm


def to_product_layout(matrix: ScaledMatrix, basis: BasisSpec) -> ScaledMatrix:
    """Re-index an operator from field enumeration order to the product layout."""
    perm = tensor_permutation(basis)
    data = np.zeros_like(matrix.data)
    data[np.ix_(perm, perm)] = matrix.data
    return ScaledMatrix(matrix.base, matrix.conductor, data, matrix.scale)


def factor_selfdual(a: PauliMonomial, basis: BasisSpec) -> list[PauliMonomial]:
    """Single-qudit factors whose tensor product equals ``a`` in the product layout.

    With mu = sum m_j theta_j and tr(theta_i theta_j) = g_j delta_ij, one has
    tr(mu lam) = sum_j g_j m_j l_j, so Z_mu factors as Z^(g_1 m_1) x ... and
    X_nu as X^(n_1) x ....  For a self-dual basis every g_j is 1; an
    almost-self-dual basis only rescales the exponent at its exceptional slot.
    """
    if a.phase:
        raise ValueError("factorization is defined for phase-free monomials")
    if not basis.is_almost_selfdual():
        raise ValueError(f"basis {basis} is neither self-dual nor almost self-dual")
    f = a.field
    prime = galois_field(f.p)
    g = basis.self_traces()
    zs = expand(a.z, basis)
    xs = expand(a.x, basis)
    return [
        PauliMonomial(prime, 0, prime.from_int(gj * mj), prime.from_int(nj))
        for gj, mj, nj in zip(g, zs, xs)
    ]


def tensor_matrix(factors: Sequence[PauliMonomial]) -> ScaledMatrix:
    out = to_matrix(factors[0])
    for fac in factors[1:]:
        out = out.tensor(to_matrix(fac))
    return out


def check_factorization(a: PauliMonomial, basis: BasisSpec) -> bool:
    return tensor_matrix(factor_selfdual(a, basis)) == to_product_layout(to_matrix(a), basis)
