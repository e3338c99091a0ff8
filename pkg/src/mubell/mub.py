"""Complete sets of mutually unbiased bases in dimension p^n.

Basis 0 is the computational basis, basis nu (nu != 0) collects the common
eigenvectors of the commuting class {Lambda(mu, nu) : mu != 0}, and the last
basis is the Fourier (conjugate) basis, the eigenbasis of the X_mu.

For odd p, and for a single qubit, basis nu is obtained by applying the
rotation V_nu to the computational basis.  V_nu is diagonal in the Fourier
basis with entries c(lam, nu) = chi(-lam^2 nu / 2) (the explicit qubit matrix
corresponds to c(1, 1) = i).  For p = 2 and n > 1 no such formula is used:
the class eigenvectors are computed by projecting onto the joint eigenspaces
of n independent generators of the class.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field as dc_field
from typing import Sequence

import numpy as np

from .cyclotomic import CycInt, ScaledMatrix, ScaledVector, root_power
from .galois import FieldElement, FieldError, GaloisField, polynomial_basis
from .pauli import PauliMonomial, compose, conductor_for, lambda_class, to_matrix, z_op

__all__ = [
    "ConstructionError",
    "MubTable",
    "fourier_matrix",
    "rotation_coefficient",
    "v_operator",
    "conjugation_check",
    "predicted_phase",
    "mub_state",
    "basis_matrix",
    "mub_table",
    "check_unbiased",
    "gram_hadamard",
    "lambda_matrix_element_check",
    "literal_matrix_element_identity",
    "diagonalizes",
]


class ConstructionError(AssertionError):
    """An exact identity that must hold by construction failed."""


def fourier_matrix(field: GaloisField) -> ScaledMatrix:
    """F = q^(-1/2) sum chi(lam lam') |lam><lam'|."""
    m = conductor_for(field.p)
    q = field.q
    data = np.zeros((q, q, m), dtype=np.int64)
    for i, a in enumerate(field.enumeration):
        for j, b in enumerate(field.enumeration):
            data[i, j, field.character_exponent(a * b, m)] = 1
    return ScaledMatrix(field.p, m, data, field.n)


def _diagonal(field: GaloisField, exponents: Sequence[int]) -> ScaledMatrix:
    m = conductor_for(field.p)
    q = field.q
    data = np.zeros((q, q, m), dtype=np.int64)
    for i, k in enumerate(exponents):
        data[i, i, k % m] = 1
    return ScaledMatrix(field.p, m, data)


def rotation_coefficient(lam: FieldElement, nu: FieldElement) -> CycInt:
    """c(lam, nu), the eigenvalue of V_nu on the Fourier state |~lam>."""
    f = lam.field
    if f.p == 2:
        if f.n != 1:
            raise FieldError("no closed-form rotation coefficients for p = 2, n > 1")
        # qubit: c(0) = 1, c(1) = i for nu = 1
        return root_power(4, 1 if (lam and nu) else 0)
    return f.additive_character(-(f.half * lam * lam * nu))


def _qubit_v() -> ScaledMatrix:
    i = CycInt(4, [0, 1])
    return ScaledMatrix.from_entries(2, 4, [[1 + i, 1 - i], [1 - i, 1 + i]], scale=2)


def v_operator(nu: FieldElement) -> ScaledMatrix:
    """The rotation V_nu = sum_lam c(lam, nu) |~lam><~lam|."""
    f = nu.field
    m = conductor_for(f.p)
    if not nu:
        return ScaledMatrix.identity(f.p, m, f.q)
    if f.p == 2:
        if f.n == 1:
            return _qubit_v()
        raise FieldError("V_nu is only defined for odd p or a single qubit; use basis_matrix")
    coeffs = [rotation_coefficient(lam, nu) for lam in f.enumeration]
    diag = _diagonal(f, [_root_exponent(c) for c in coeffs])
    fourier = fourier_matrix(f)
    return fourier @ diag @ fourier.adjoint()


def _root_exponent(z: CycInt) -> int:
    for k in range(z.conductor):
        if z == root_power(z.conductor, k):
            return k
    raise ValueError(f"{z} is not a power of w_{z.conductor}")


def predicted_phase(mu: FieldElement, nu: FieldElement) -> CycInt:
    """chi(nu mu^2 / 2): the phase with Lambda(mu, nu) = phase * V_nu Z_mu V_nu^+ (odd p)."""
    f = mu.field
    return f.additive_character(f.half * nu * mu * mu)


def conjugation_check(mu: FieldElement, nu: FieldElement) -> CycInt:
    """Return the unit phase phi with Lambda(mu, nu) = phi * V_nu Z_mu V_nu^+.

    Raises :class:`ConstructionError` when the conjugate is not proportional
    to Lambda(mu, nu), or (odd p) when phi differs from :func:`predicted_phase`.
    """
    v = v_operator(nu)
    conj = v @ to_matrix(z_op(mu)) @ v.adjoint()
    target = to_matrix(lambda_class(mu, nu))
    phi = target.equals_up_to_phase(conj)
    if phi is None:
        raise ConstructionError(f"V Z V^+ is not proportional to Lambda({mu}, {nu})")
    if mu.field.p != 2 and phi != predicted_phase(mu, nu):
        raise ConstructionError(f"phase {phi} differs from the predicted {predicted_phase(mu, nu)}")
    return phi


# ---------------------------------------------------------------------------
# class eigenbases
# ---------------------------------------------------------------------------


def _class_generators(nu: FieldElement) -> list[PauliMonomial]:
    """n generators of the class nu, rescaled to square to the identity (p = 2)."""
    f = nu.field
    gens = []
    for theta in polynomial_basis(f):
        g = lambda_class(theta, nu)
        sq = compose(g, g)
        assert not sq.z and not sq.x
        if sq.phase:
            # g^2 = -1: multiply by i
            g = PauliMonomial(f, g.phase + 1, g.z, g.x)
        gens.append(g)
    return gens


def _eigenbasis_by_projection(nu: FieldElement) -> ScaledMatrix:
    f = nu.field
    gens = [to_matrix(g) for g in _class_generators(nu)]
    eye = ScaledMatrix.identity(f.p, 4, f.q)
    start = ScaledVector.basis_vector(f.p, 4, f.q, 0)
    columns = []
    for signs in itertools.product((0, 1), repeat=f.n):
        vec: ScaledMatrix = start
        for s, g in zip(signs, gens):
            half = (eye - g if s else eye + g).divide_by_sqrt_base(2)
            vec = half @ vec
        if vec.is_zero() or vec.scale < f.n:
            raise ConstructionError("class projector has no overlap with |0>")
        # P|0> = psi <psi|0> with <psi|0> = 2^(-n/2) > 0, so psi = 2^(n/2) P|0>
        columns.append(ScaledVector(f.p, 4, vec.data, vec.scale - f.n))
    return _as_matrix(columns)


def basis_matrix(field: GaloisField, label: int | FieldElement | str) -> ScaledMatrix:
    """Unitary whose columns are the states of one MUB.

    ``label`` is a field element nu (class basis, nu = 0 is computational) or
    the string ``"fourier"``.
    """
    if isinstance(label, str):
        if label != "fourier":
            raise ValueError(f"unknown basis label {label!r}")
        return fourier_matrix(field)
    nu = label if isinstance(label, FieldElement) else field(label)
    if not nu:
        return ScaledMatrix.identity(field.p, conductor_for(field.p), field.q)
    if field.p == 2 and field.n > 1:
        return _eigenbasis_by_projection(nu)
    return v_operator(nu)


def mub_state(nu: FieldElement, lam: FieldElement) -> ScaledVector:
    """|psi_lam^nu>: column lam of the basis matrix of class nu (V_nu |lam> when defined)."""
    f = nu.field
    return basis_matrix(f, nu).column(f.index(lam))


# ---------------------------------------------------------------------------
# unbiasedness
# ---------------------------------------------------------------------------


def _as_matrix(basis: ScaledMatrix | Sequence[ScaledVector]) -> ScaledMatrix:
    if isinstance(basis, ScaledMatrix):
        return basis
    vectors = list(basis)
    first = vectors[0]
    m = max(v.conductor for v in vectors)
    scale = max(v.scale for v in vectors)
    cols = []
    for v in vectors:
        v = v.with_conductor(m)
        if (scale - v.scale) % 2:
            raise ValueError("basis vectors with scales of different parity")
        cols.append(v.data[:, 0, :] * first.base ** ((scale - v.scale) // 2))
    return ScaledMatrix(first.base, m, np.stack(cols, axis=1), scale)


def _entrywise_abs_squared(mat: ScaledMatrix) -> ScaledMatrix:
    m = mat.conductor
    data = mat.data
    conj = np.zeros_like(data)
    for k in range(m):
        conj[..., (-k) % m] += data[..., k]
    out = np.zeros_like(data)
    for a in range(m):
        if not data[..., a].any():
            continue
        for b in range(m):
            out[..., (a + b) % m] += data[..., a] * conj[..., b]
    return ScaledMatrix(mat.base, m, out, 2 * mat.scale)


def _flat(mat: ScaledMatrix, dim: int) -> bool:
    """Every entry of ``mat`` has squared modulus exactly 1/dim."""
    base = mat.base
    e = 0
    while base**e < dim * dim:
        e += 1
    if base**e != dim * dim:
        raise ValueError(f"dimension {dim} is not a power of {base}")
    rows, cols = mat.shape
    ones = np.zeros((rows, cols, mat.conductor), dtype=np.int64)
    ones[..., 0] = 1
    # 1/dim = 1/sqrt(base)^e with base^e = dim^2
    return _entrywise_abs_squared(mat) == ScaledMatrix(base, mat.conductor, ones, e)


def _orthonormal(mat: ScaledMatrix) -> bool:
    return mat.adjoint() @ mat == ScaledMatrix.identity(mat.base, mat.conductor, mat.shape[1])


def check_unbiased(b1: ScaledMatrix | Sequence[ScaledVector], b2: ScaledMatrix | Sequence[ScaledVector]) -> bool:
    """Both bases orthonormal and every cross overlap has |<a|b>|^2 = 1/dim."""
    m1, m2 = _as_matrix(b1), _as_matrix(b2)
    if m1.shape != m2.shape:
        raise ValueError("bases of different dimensions")
    if not (_orthonormal(m1) and _orthonormal(m2)):
        return False
    return _flat(m1.adjoint() @ m2, m1.shape[0])


def gram_hadamard(b1: ScaledMatrix | Sequence[ScaledVector], b2: ScaledMatrix | Sequence[ScaledVector]) -> ScaledMatrix:
    """Matrix of overlaps <b1_i|b2_j>; checked to be a generalized Hadamard matrix."""
    m1, m2 = _as_matrix(b1), _as_matrix(b2)
    g = m1.adjoint() @ m2
    if not g.is_unitary():
        raise ConstructionError("overlap matrix is not unitary")
    if not _flat(g, g.shape[0]):
        raise ConstructionError("overlap matrix entries do not share one modulus")
    return g


def diagonalizes(basis: ScaledMatrix, operator: ScaledMatrix) -> bool:
    """True when every basis vector is an eigenvector of ``operator``."""
    rep = basis.adjoint() @ operator @ basis
    off = rep.data.copy()
    idx = np.arange(rep.shape[0])
    off[idx, idx] = 0
    return not off.any()


def lambda_matrix_element_check(mu: FieldElement, nu: FieldElement) -> bool:
    """Lambda_{lam lam'}(mu, nu) = phi * <chi_lam| Z_mu |chi_lam'> entrywise.

    Here chi_lam = V_nu^+ |lam> (the states of the basis labelled -nu) and phi
    is the phase returned by :func:`conjugation_check`.
    """
    f = mu.field
    phi = conjugation_check(mu, nu)
    v = v_operator(nu)
    states = v.adjoint()
    z = to_matrix(z_op(mu))
    lam = to_matrix(lambda_class(mu, nu))
    for i in range(f.q):
        left = states.column(i)
        for j in range(f.q):
            right = states.column(j)
            elem = (left.adjoint() @ z @ right).times(phi)
            if elem != ScaledMatrix.from_entries(f.p, lam.conductor, [[lam[i, j]]]):
                return False
    return True


def literal_matrix_element_identity(mu: FieldElement, nu: FieldElement) -> bool:
    """The same identity with the basis states V_nu |lam> in place of V_nu^+ |lam>."""
    phi = conjugation_check(mu, nu)
    v = v_operator(nu)
    lhs = to_matrix(lambda_class(mu, nu))
    return lhs == (v.adjoint() @ to_matrix(z_op(mu)) @ v).times(phi)


# ---------------------------------------------------------------------------
# the full table
# ---------------------------------------------------------------------------


@dataclass
class MubTable:
    """The q + 1 bases; ``bases[k]`` holds basis k's states as columns."""

    field: GaloisField
    bases: list[ScaledMatrix]
    labels: list[str]
    pairs_verified: int = 0
    conventions: dict = dc_field(default_factory=dict)

    def __len__(self) -> int:
        return len(self.bases)

    def states(self, k: int) -> list[ScaledVector]:
        return self.bases[k].columns()

    def verify(self) -> int:
        """Check orthonormality of every basis and unbiasedness of every pair."""
        q = self.field.q
        for k, b in enumerate(self.bases):
            if not _orthonormal(b):
                raise ConstructionError(f"basis {self.labels[k]} is not orthonormal")
        pairs = 0
        for i, j in itertools.combinations(range(len(self.bases)), 2):
            if not _flat(self.bases[i].adjoint() @ self.bases[j], q):
                raise ConstructionError(f"bases {self.labels[i]} and {self.labels[j]} are not unbiased")
            pairs += 1
        self.pairs_verified = pairs
        return pairs

    def to_json(self) -> dict:
        f = self.field
        return {
            "p": f.p,
            "n": f.n,
            "modulus": list(f.modulus),
            "primitive": list(f.primitive.coeffs),
            "conventions": self.conventions,
            "labels": self.labels,
            "bases": [
                [{"scale": v.scale, "entries": [str(z) for z in v.entries()]} for v in b.columns()]
                for b in self.bases
            ],
            "verification": {
                "pairs_verified": self.pairs_verified,
                "exact": self.pairs_verified == len(self.bases) * (len(self.bases) - 1) // 2,
            },
        }


def mub_table(field: GaloisField, verify: bool = True) -> MubTable:
    bases = [basis_matrix(field, nu) for nu in field.enumeration]
    labels = ["computational"] + [f"nu={nu}" for nu in field.nonzero()]
    bases.append(fourier_matrix(field))
    labels.append("fourier")
    m = conductor_for(field.p)
    bases = [b.with_conductor(m) for b in bases]
    conventions = {
        "ordering": "field enumeration: 0, then powers of the primitive element",
        "class_bases": "V_nu rotation" if (field.p != 2 or field.n == 1) else "class projection",
        "conductor": m,
    }
    table = MubTable(field, bases, labels, conventions=conventions)
    if verify:
        table.verify()
    return table
