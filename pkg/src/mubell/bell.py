"""Generalized Bell bases for two parties of n qudits each.

Two constructions are provided for a label (mu, nu):

* :func:`bell_state` -- the shifted-character formula
  ``q^(-1/2) sum_lam chi(mu lam) |lam>_A |lam + nu>_B``;
* :func:`bell_from_lambda` -- the state whose amplitude matrix is the
  operator Lambda(mu, nu) = Z_mu X_{nu mu}, i.e.
  ``q^(-1/2) sum Lambda_{lam lam'}(mu, nu) |lam>_A |lam'>_B``.

They span the same basis but are not the same state label by label:
``bell_from_lambda(mu, nu) == bell_state(mu, -nu*mu)`` exactly (see
:func:`partner_label`).  Symmetry classes and projector sums are stated for
the Lambda construction, which is therefore the default for
:func:`full_basis`.

Bipartite vectors are indexed A-major: ``index = pos(lam_A) * q + pos(lam_B)``
with ``pos`` the field enumeration order.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .cyclotomic import CycInt, ScaledMatrix, ScaledVector, root_power
from .galois import BasisSpec, FieldElement, FieldError, GaloisField, compose as compose_coords
from .galois import find_selfdual, galois_field
from .mub import ConstructionError
from .pauli import (
    conductor_for,
    lambda_class,
    lambda_tilde,
    tensor_permutation,
    to_matrix,
    x_op,
    z_op,
)
from .pauli import compose as compose_ops

MULTIQUDIT = "multiqudit"
SINGLE_PARTICLE = "single-particle"


# ---------------------------------------------------------------------------
# labels and states
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class BellLabel:
    """``Psi(mu, nu)`` (kind ``psi``) or ``PsiTilde(mu)`` (kind ``tilde``)."""

    kind: str
    mu: FieldElement
    nu: FieldElement | None = None

    def __post_init__(self):
        if self.kind not in ("psi", "tilde"):
            raise ValueError(f"unknown Bell label kind {self.kind!r}")
        if (self.kind == "psi") != (self.nu is not None):
            raise ValueError("Psi labels carry (mu, nu); PsiTilde labels carry mu only")

    @property
    def field(self) -> GaloisField:
        return self.mu.field

    def __str__(self) -> str:
        if self.kind == "tilde":
            return f"PsiTilde({self.mu})"
        return f"Psi({self.mu},{self.nu})"


def Psi(mu: FieldElement, nu: FieldElement) -> BellLabel:
    return BellLabel("psi", mu, nu)


def PsiTilde(mu: FieldElement) -> BellLabel:
    return BellLabel("tilde", mu)


@dataclass(frozen=True)
class BellState:
    label: BellLabel
    vector: ScaledVector

    def __str__(self) -> str:
        return str(self.label)


def _pair_vector(field: GaloisField, amplitudes: Iterable[tuple[FieldElement, FieldElement, int]]) -> ScaledVector:
    """Vector sum of w_M^k |a>|b> over (a, b, k), divided by sqrt(q)."""
    m = conductor_for(field.p)
    q = field.q
    data = np.zeros((q * q, 1, m), dtype=np.int64)
    for a, b, k in amplitudes:
        data[field.index(a) * q + field.index(b), 0, k % m] += 1
    return ScaledVector(field.p, m, data, field.n)


def bell_state(mu: FieldElement, nu: FieldElement) -> BellState:
    """q^(-1/2) sum_lam chi(mu lam) |lam>_A |lam + nu>_B."""
    f = mu.field
    m = conductor_for(f.p)
    vec = _pair_vector(f, ((lam, lam + nu, f.character_exponent(mu * lam, m)) for lam in f.enumeration))
    return BellState(Psi(mu, nu), vec)


def bell_tilde(mu: FieldElement) -> BellState:
    """q^(-1/2) sum_lam |lam>_A |lam + mu>_B."""
    f = mu.field
    return BellState(PsiTilde(mu), _pair_vector(f, ((lam, lam + mu, 0) for lam in f.enumeration)))


def _from_operator(matrix: ScaledMatrix, field: GaloisField) -> ScaledVector:
    q = field.q
    data = matrix.data.reshape(q * q, 1, matrix.conductor)
    return ScaledVector(matrix.base, matrix.conductor, data, matrix.scale + field.n)


def bell_from_lambda(mu: FieldElement, nu: FieldElement) -> BellState:
    """q^(-1/2) sum Lambda_{lam lam'}(mu, nu) |lam>_A |lam'>_B."""
    f = mu.field
    return BellState(Psi(mu, nu), _from_operator(to_matrix(lambda_class(mu, nu)), f))


def bell_tilde_from_lambda(mu: FieldElement) -> BellState:
    f = mu.field
    return BellState(PsiTilde(mu), _from_operator(to_matrix(lambda_tilde(mu)), f))


def lambda_partner(mu: FieldElement, nu: FieldElement) -> BellLabel:
    """Label of the shifted-character state equal to ``bell_from_lambda(mu, nu)``."""
    if not mu:
        return PsiTilde(mu.field.zero)
    return Psi(mu, -(nu * mu))


def partner_label(label: BellLabel) -> BellLabel:
    """Shifted-character label whose state equals the Lambda-construction state of ``label``.

    X_mu has matrix elements at (lam + mu, lam), so the tilde family maps
    mu -> -mu; the Psi family maps (mu, nu) -> (mu, -nu mu).
    """
    if label.kind == "tilde":
        return PsiTilde(-label.mu)
    return lambda_partner(label.mu, label.nu)


def state_for(label: BellLabel, construction: str = "lambda") -> BellState:
    if label.kind == "tilde":
        return bell_tilde(label.mu) if construction == "direct" else bell_tilde_from_lambda(label.mu)
    if construction == "direct":
        return bell_state(label.mu, label.nu)
    if construction == "lambda":
        return bell_from_lambda(label.mu, label.nu)
    raise ValueError(f"unknown construction {construction!r}")


def all_labels(field: GaloisField) -> list[BellLabel]:
    """PsiTilde block by mu, then Psi(mu, nu) for mu != 0, in field enumeration order."""
    labels = [PsiTilde(mu) for mu in field.enumeration]
    labels += [Psi(mu, nu) for mu in field.nonzero() for nu in field.enumeration]
    return labels


def full_basis(field: GaloisField, construction: str = "lambda") -> list[BellState]:
    return [state_for(label, construction) for label in all_labels(field)]


@dataclass(frozen=True)
class Equivalence:
    label: BellLabel
    literal_phase: CycInt | None
    partner: BellLabel
    partner_phase: CycInt | None


def construction_equivalence(field: GaloisField) -> list[Equivalence]:
    """Compare the two constructions label by label.

    ``literal_phase`` is the global phase relating ``bell_from_lambda(mu, nu)``
    to ``bell_state(mu, nu)`` (``None`` when they are not proportional);
    ``partner_phase`` relates it to the state named by :func:`partner_label`.
    """
    out = []
    for label in all_labels(field):
        lam_state = state_for(label, "lambda").vector
        direct = state_for(label, "direct").vector
        partner = partner_label(label)
        partner_vec = state_for(partner, "direct").vector
        out.append(
            Equivalence(
                label,
                lam_state.equals_up_to_phase(direct),
                partner,
                lam_state.equals_up_to_phase(partner_vec),
            )
        )
    return out


def qubit_names() -> dict[str, ScaledVector]:
    """The four textbook two-qubit Bell vectors (|00>, |01>, |10>, |11> order)."""

    def vec(entries):
        return ScaledVector.from_entries(2, 4, entries, scale=1)

    return {
        "Phi+": vec([1, 0, 0, 1]),
        "Phi-": vec([1, 0, 0, -1]),
        "Psi+": vec([0, 1, 1, 0]),
        "Psi-": vec([0, 1, -1, 0]),
    }


def qubit_name(state: BellState) -> str | None:
    if state.label.field.q != 2:
        return None
    for name, vec in qubit_names().items():
        if state.vector == vec:
            return name
    return None


# ---------------------------------------------------------------------------
# Gram matrix, completeness, entanglement
# ---------------------------------------------------------------------------


def _stack(states: Sequence[BellState | ScaledVector]) -> ScaledMatrix:
    vectors = [s.vector if isinstance(s, BellState) else s for s in states]
    scale = max(v.scale for v in vectors)
    m = max(v.conductor for v in vectors)
    cols = []
    for v in vectors:
        if (scale - v.scale) % 2:
            raise ValueError("states with scales of different parity")
        cols.append(v.with_conductor(m).data[:, 0, :] * v.base ** ((scale - v.scale) // 2))
    return ScaledMatrix(vectors[0].base, m, np.stack(cols, axis=1), scale)


def gram(states: Sequence[BellState | ScaledVector]) -> ScaledMatrix:
    """Matrix of inner products <s_i|s_j>."""
    mat = _stack(states)
    return mat.adjoint() @ mat


def projector_total(states: Sequence[BellState | ScaledVector]) -> ScaledMatrix:
    """sum_i |s_i><s_i|."""
    mat = _stack(states)
    return mat @ mat.adjoint()


def cross_overlaps_vanish(field: GaloisField, construction: str = "direct") -> bool:
    """<Psi(mu, nu)|PsiTilde(mu')> = 0 for every mu != 0."""
    tildes = [state_for(PsiTilde(m), construction) for m in field.enumeration]
    psis = [state_for(Psi(m, n), construction) for m in field.nonzero() for n in field.enumeration]
    overlaps = _stack(psis).adjoint() @ _stack(tildes)
    return overlaps.is_zero()


def _amplitude_matrix(vec: ScaledVector, q: int) -> ScaledMatrix:
    return ScaledMatrix(vec.base, vec.conductor, vec.data.reshape(q, q, vec.conductor), vec.scale)


def reduced_density(vec: ScaledVector | BellState, side: str, q: int | None = None) -> ScaledMatrix:
    """Reduced state of party ``side`` ('A' or 'B') of a bipartite pure state."""
    if isinstance(vec, BellState):
        q = vec.label.field.q
        vec = vec.vector
    if q is None:
        q = int(round(vec.dim**0.5))
    if q * q != vec.dim:
        raise ValueError("vector dimension is not a square")
    amp = _amplitude_matrix(vec, q)
    if side == "A":
        return amp @ amp.adjoint()
    if side == "B":
        return (amp.adjoint() @ amp).transpose()
    raise ValueError("side must be 'A' or 'B'")


def maximally_mixed(field: GaloisField) -> ScaledMatrix:
    eye = ScaledMatrix.identity(field.p, conductor_for(field.p), field.q)
    return eye.divide_by_sqrt_base(2 * field.n)


def is_maximally_entangled(state: BellState) -> bool:
    target = maximally_mixed(state.label.field)
    return reduced_density(state, "A") == target and reduced_density(state, "B") == target


# ---------------------------------------------------------------------------
# symmetry under exchange of the parties
# ---------------------------------------------------------------------------


def swap(vec: ScaledVector, q: int) -> ScaledVector:
    """Exchange parties A and B."""
    amp = vec.data.reshape(q, q, vec.conductor)
    data = np.transpose(amp, (1, 0, 2)).reshape(q * q, 1, vec.conductor)
    return ScaledVector(vec.base, vec.conductor, data, vec.scale)


def swap_phase(vec: ScaledVector, q: int) -> CycInt | None:
    """Eigenvalue of the swap on ``vec``, or ``None`` if ``vec`` is not an eigenvector."""
    return swap(vec, q).equals_up_to_phase(vec)


@dataclass(frozen=True)
class SymmetryClass:
    """``kind`` is ``symmetric``, ``antisymmetric`` or ``none``.

    ``phase`` is w_p^tr(nu mu^2) for Psi labels (1 for PsiTilde);
    ``swap_eigenstate`` records whether the state is a swap eigenvector at all.
    """

    kind: str
    phase: CycInt
    swap_eigenstate: bool = True


def trace_phase(label: BellLabel) -> CycInt:
    f = label.field
    if label.kind == "tilde":
        return root_power(f.p, 0)
    return root_power(f.p, (label.nu * label.mu * label.mu).trace())


def swap_kind(phase: CycInt | None) -> str:
    if phase is None:
        return "none"
    if phase == 1:
        return "symmetric"
    if phase == -1:
        return "antisymmetric"
    return "none"


def symmetry_class(label: BellLabel) -> SymmetryClass:
    """Exchange symmetry of the Lambda-construction state of ``label``.

    The swap oracle decides; in characteristic 2 its verdict must agree with
    tr(nu mu^2) = 0 (symmetric) / 1 (antisymmetric).
    """
    f = label.field
    vec = state_for(label, "lambda").vector
    observed = swap_phase(vec, f.q)
    predicted = trace_phase(label)
    kind = swap_kind(observed)
    if f.p == 2:
        expected = "symmetric" if predicted == 1 else "antisymmetric"
        if kind != expected:
            raise ConstructionError(f"{label}: swap gives {kind}, trace formula gives {expected}")
    return SymmetryClass(kind, predicted, observed is not None)


def ququart_states() -> list[tuple[tuple[int, int], ScaledVector]]:
    """Single-particle d = 4 Bell states (1/2) sum_l i^(m l) |l>|l + n mod 4>."""
    out = []
    for m in range(4):
        for n in range(4):
            data = np.zeros((16, 1, 4), dtype=np.int64)
            for l in range(4):
                data[l * 4 + (l + n) % 4, 0, (m * l) % 4] = 1
            out.append(((m, n), ScaledVector(2, 4, data, 2)))
    return out


def symmetry_census(field: GaloisField, mode: str = MULTIQUDIT) -> tuple[int, int, int]:
    """(symmetric, antisymmetric, neither) counts over a full Bell basis."""
    counts = {"symmetric": 0, "antisymmetric": 0, "none": 0}
    if mode == MULTIQUDIT:
        for label in all_labels(field):
            counts[symmetry_class(label).kind] += 1
    elif mode == SINGLE_PARTICLE:
        if field.q != 4:
            raise FieldError("single-particle mode is only defined for dimension 4")
        for _, vec in ququart_states():
            counts[swap_kind(swap_phase(vec, 4))] += 1
    else:
        raise ValueError(f"unknown mode {mode!r}")
    return counts["symmetric"], counts["antisymmetric"], counts["none"]


# ---------------------------------------------------------------------------
# projector sums
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ProjectorSum:
    lhs: ScaledMatrix
    rhs: ScaledMatrix

    @property
    def holds(self) -> bool:
        return self.lhs == self.rhs


def _op_sum(field: GaloisField, pairs) -> ScaledMatrix:
    q = field.q
    m = conductor_for(field.p)
    total = ScaledMatrix.zeros(field.p, m, q * q, q * q)
    for a, b in pairs:
        total = total + to_matrix(a).tensor(to_matrix(b))
    return total.divide_by_sqrt_base(2 * field.n)


def projector_sum(nu: FieldElement, construction: str = "lambda") -> ProjectorSum:
    """sum over all mu of |Psi(mu,nu)><Psi(mu,nu)| against
    q^-1 sum_lam (X_{lam nu} Z_{-lam})_A (x) (X_{lam nu} Z_lam)_B."""
    f = nu.field
    states = [state_for(Psi(mu, nu), construction) for mu in f.enumeration]
    rhs = _op_sum(
        f,
        (
            (compose_ops(x_op(lam * nu), z_op(-lam)), compose_ops(x_op(lam * nu), z_op(lam)))
            for lam in f.enumeration
        ),
    )
    return ProjectorSum(projector_total(states), rhs)


def projector_sum_shifted(nu: FieldElement) -> ProjectorSum:
    """The same right-hand side, summed over the family bell_state(mu, nu*mu).

    That family is {bell_from_lambda(mu, -nu)}; it coincides with the family
    of :func:`projector_sum` in characteristic 2 and is the one for which the
    operator identity holds for every p.
    """
    f = nu.field
    states = [bell_state(mu, nu * mu) if mu else bell_tilde(f.zero) for mu in f.enumeration]
    return ProjectorSum(projector_total(states), projector_sum(nu).rhs)


def projector_sum_tilde(field: GaloisField) -> ProjectorSum:
    """sum over mu of |PsiTilde(mu)><PsiTilde(mu)| against q^-1 sum_lam X_lam (x) X_lam."""
    states = [bell_tilde(mu) for mu in field.enumeration]
    rhs = _op_sum(field, ((x_op(lam), x_op(lam)) for lam in field.enumeration))
    return ProjectorSum(projector_total(states), rhs)


# ---------------------------------------------------------------------------
# two-qubit coordinates for GF(4)
# ---------------------------------------------------------------------------


def _require_gf4(field: GaloisField) -> None:
    if (field.p, field.n) != (2, 2):
        raise FieldError("two-qubit coordinates are defined for GF(4) only")


def qubit_coordinates(state: BellState, basis: BasisSpec | None = None) -> ScaledVector:
    """The state re-indexed as |l1 l2>_A |l1' l2'>_B in the coordinates of ``basis``."""
    f = state.label.field
    _require_gf4(f)
    basis = find_selfdual(f) if basis is None else basis
    perm = tensor_permutation(basis)
    q = f.q
    full = [perm[i] * q + perm[j] for i in range(q) for j in range(q)]
    return state.vector.permuted(full)


def widetext_state(m1: int, n1: int, m2: int, n2: int) -> ScaledVector:
    """(-1)^(m1 n2 + m2 n1)/2 sum (-1)^(m1 l1 + m2 l2) |l1 + m1 n2 + m2 n1, l2 + m1 n1 + m2 n2>_A |l1, l2>_B."""
    s1 = (m1 * n2 + m2 * n1) % 2
    s2 = (m1 * n1 + m2 * n2) % 2
    sign = s1
    data = np.zeros((16, 1, 4), dtype=np.int64)
    for l1 in (0, 1):
        for l2 in (0, 1):
            a = ((l1 + s1) % 2) * 2 + (l2 + s2) % 2
            b = l1 * 2 + l2
            k = 2 * ((sign + m1 * l1 + m2 * l2) % 2)
            data[a * 4 + b, 0, k] = 1
    return ScaledVector(2, 4, data, 2)


def widetext_tilde(m1: int, m2: int) -> ScaledVector:
    """(1/2) sum |l1 + m1, l2 + m2>_A |l1, l2>_B."""
    data = np.zeros((16, 1, 4), dtype=np.int64)
    for l1 in (0, 1):
        for l2 in (0, 1):
            a = ((l1 + m1) % 2) * 2 + (l2 + m2) % 2
            data[a * 4 + l1 * 2 + l2, 0, 0] = 1
    return ScaledVector(2, 4, data, 2)


@dataclass(frozen=True)
class WidetextRecord:
    coords: tuple[int, ...]
    label: BellLabel
    phase: CycInt | None
    matched: str | None
    formula_symmetric: bool | None
    swap: CycInt | None


def compare_widetext(field: GaloisField | None = None) -> list[WidetextRecord]:
    """Check the explicit GF(4) coordinate formulas against the abstract basis.

    For each of the 16 labels: ``phase`` relates the coordinate formula to the
    Lambda-construction state with the same label (``None`` if not
    proportional); ``matched`` names any basis state it is proportional to.
    """
    field = galois_field(2, 2) if field is None else field
    _require_gf4(field)
    basis = find_selfdual(field)
    states = {str(s.label): qubit_coordinates(s, basis) for s in full_basis(field)}
    records = []

    def find(vec: ScaledVector) -> str | None:
        for name, v in states.items():
            if vec.equals_up_to_phase(v) is not None:
                return name
        return None

    for m1 in (0, 1):
        for m2 in (0, 1):
            mu = compose_coords((m1, m2), basis)
            if not mu:
                continue
            for n1 in (0, 1):
                for n2 in (0, 1):
                    nu = compose_coords((n1, n2), basis)
                    label = Psi(mu, nu)
                    vec = widetext_state(m1, n1, m2, n2)
                    records.append(
                        WidetextRecord(
                            (m1, n1, m2, n2),
                            label,
                            vec.equals_up_to_phase(states[str(label)]),
                            find(vec),
                            (m1 * n2 + m2 * n1) % 2 == 0,
                            swap_phase(vec, 4),
                        )
                    )
    for m1 in (0, 1):
        for m2 in (0, 1):
            label = PsiTilde(compose_coords((m1, m2), basis))
            vec = widetext_tilde(m1, m2)
            records.append(
                WidetextRecord(
                    (m1, m2),
                    label,
                    vec.equals_up_to_phase(states[str(label)]),
                    find(vec),
                    True,
                    swap_phase(vec, 4),
                )
            )
    return records
