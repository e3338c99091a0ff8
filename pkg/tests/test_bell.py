import itertools

import numpy as np
import pytest

from mubell import bell
from mubell.bell import (
    Psi,
    PsiTilde,
    bell_from_lambda,
    bell_state,
    bell_tilde,
    bell_tilde_from_lambda,
    full_basis,
    gram,
    projector_sum,
    projector_sum_shifted,
    projector_sum_tilde,
    qubit_coordinates,
    reduced_density,
    symmetry_census,
    symmetry_class,
)
from mubell.cyclotomic import CycInt, ScaledMatrix, ScaledVector, root_power
from mubell.galois import FieldError, compose, find_selfdual, galois_field
from mubell.pauli import compose as compose_ops, to_matrix, x_op, z_op

import oracles
from oracles import close, proportional

SMALL = [(2, 1), (3, 1), (2, 2), (5, 1), (7, 1), (2, 3), (3, 2)]
UP_TO_9 = [(2, 1), (3, 1), (2, 2), (5, 1), (3, 2)]


def vec(base, m, entries, scale):
    return ScaledVector.from_entries(base, m, entries, scale)


# -- individual states --------------------------------------------------------------


def test_qubit_states():
    f = galois_field(2)
    assert bell_tilde(f.zero).vector == vec(2, 4, [1, 0, 0, 1], 1)
    assert bell_state(f.one, f.one).vector == vec(2, 4, [0, 1, -1, 0], 1)
    assert bell_from_lambda(f.one, f.zero).vector == vec(2, 4, [1, 0, 0, -1], 1)
    assert bell_from_lambda(f.one, f.zero).vector == bell_state(f.one, f.zero).vector


def test_qutrit_state():
    f = galois_field(3)
    w = root_power(3, 1)
    entries = [0] * 9
    entries[0], entries[4], entries[8] = 1, w, w * w
    assert bell_state(f.one, f.zero).vector == vec(3, 3, entries, 1)


@pytest.mark.parametrize("p,n", SMALL)
def test_states_match_float_oracle(p, n):
    f = galois_field(p, n)
    for mu, nu in itertools.product(f.enumeration, repeat=2):
        assert close(bell_state(mu, nu).vector.to_complex().reshape(-1), oracles.bell_direct(mu, nu))
        assert close(bell_from_lambda(mu, nu).vector.to_complex().reshape(-1), oracles.bell_lambda(mu, nu))
    for mu in f.enumeration:
        assert close(bell_tilde(mu).vector.to_complex().reshape(-1), oracles.bell_tilde(mu))


def test_psi_zero_is_tilde():
    for p, n in SMALL:
        f = galois_field(p, n)
        for nu in f.enumeration:
            assert bell_state(f.zero, nu).vector == bell_tilde(nu).vector


@pytest.mark.parametrize("p,n", SMALL)
def test_lambda_construction_partners(p, n):
    f = galois_field(p, n)
    for mu, nu in itertools.product(f.nonzero(), f.enumeration):
        assert bell_from_lambda(mu, nu).vector == bell_state(mu, -(nu * mu)).vector
    for mu in f.enumeration:
        assert bell_tilde_from_lambda(mu).vector == bell_tilde(-mu).vector


def test_labelwise_agreement_fails_off_characteristic_two():
    f = galois_field(3)
    lam = bell_from_lambda(f.one, f.one).vector
    assert lam.equals_up_to_phase(bell_state(f.one, f.one).vector) is None
    assert proportional(oracles.bell_lambda(f.one, f.one), oracles.bell_direct(f.one, f.one)) is None
    eq = bell.construction_equivalence(f)
    assert all(e.partner_phase == 1 for e in eq)
    assert sum(e.literal_phase is not None for e in eq) == 5


# -- basis, Gram, completeness ---------------------------------------------------------------


def test_full_basis_sizes_and_order():
    g2 = galois_field(2)
    labels = [str(s.label) for s in full_basis(g2)]
    assert labels == ["PsiTilde(0)", "PsiTilde(1)", "Psi(1,0)", "Psi(1,1)"]
    assert [bell.qubit_name(s) for s in full_basis(g2)] == ["Phi+", "Psi+", "Phi-", "Psi-"]
    assert len(full_basis(galois_field(2, 2))) == 16
    assert len(full_basis(galois_field(3))) == 9


@pytest.mark.parametrize("p,n", SMALL)
@pytest.mark.parametrize("construction", ["lambda", "direct"])
def test_orthonormal_and_complete(p, n, construction):
    f = galois_field(p, n)
    m = 4 if p == 2 else p
    states = full_basis(f, construction)
    eye = ScaledMatrix.identity(p, m, f.q**2)
    assert gram(states) == eye
    assert bell.projector_total(states) == eye
    mat = np.stack([s.vector.to_complex().reshape(-1) for s in states], axis=1)
    assert np.allclose(mat.conj().T @ mat, np.eye(f.q**2))


def test_gram_examples():
    g2, g3 = galois_field(2), galois_field(3)
    g = gram([bell_state(g2.one, g2.zero), bell_tilde(g2.zero)])
    assert g == ScaledMatrix.identity(2, 4, 2)
    g = gram([bell_tilde(g3.zero), bell_tilde(g3.one)])
    assert g == ScaledMatrix.identity(3, 3, 2)


@pytest.mark.parametrize("p,n", SMALL)
def test_cross_overlaps_vanish(p, n):
    assert bell.cross_overlaps_vanish(galois_field(p, n))


# -- entanglement ----------------------------------------------------------------


def test_reduced_density_examples():
    g2, g3 = galois_field(2), galois_field(3)
    phi = bell_tilde(g2.zero)
    assert reduced_density(phi, "A") == ScaledMatrix.identity(2, 4, 2).divide_by_sqrt_base(2)
    psi = bell_state(g3.from_int(2), g3.one)
    assert reduced_density(psi, "B") == ScaledMatrix.identity(3, 3, 3).divide_by_sqrt_base(2)
    product = ScaledVector.basis_vector(2, 4, 4, 0)
    rho = reduced_density(product, "A", 2)
    assert rho == ScaledMatrix.from_entries(2, 4, [[1, 0], [0, 0]])


@pytest.mark.parametrize("p,n", UP_TO_9 + [(7, 1), (2, 3)])
def test_every_state_maximally_entangled(p, n):
    f = galois_field(p, n)
    for s in full_basis(f):
        v = s.vector.to_complex().reshape(-1)
        for side in "AB":
            assert close(reduced_density(s, side).to_complex(), oracles.partial_trace(v, f.q, side))
        assert bell.is_maximally_entangled(s)


# -- exchange symmetry -----------------------------------------------------------------


def test_symmetry_examples():
    g2, g3 = galois_field(2), galois_field(3)
    assert symmetry_class(Psi(g2.one, g2.one)).kind == "antisymmetric"
    assert symmetry_class(Psi(g2.one, g2.zero)).kind == "symmetric"
    c = symmetry_class(Psi(g3.one, g3.one))
    assert c.kind == "none" and c.phase == root_power(3, 1) and not c.swap_eigenstate


def test_census_examples():
    assert symmetry_census(galois_field(2, 2)) == (10, 6, 0)
    assert symmetry_census(galois_field(2, 2), bell.SINGLE_PARTICLE) == (6, 2, 8)
    assert symmetry_census(galois_field(2)) == (3, 1, 0)


def test_single_particle_requires_dimension_four():
    with pytest.raises(FieldError):
        symmetry_census(galois_field(3), bell.SINGLE_PARTICLE)


@pytest.mark.parametrize("p,n", SMALL)
def test_census_sums_to_basis_size(p, n):
    f = galois_field(p, n)
    assert sum(symmetry_census(f)) == f.q**2


@pytest.mark.parametrize("p,n", SMALL)
def test_swap_consistency_against_oracle(p, n):
    f = galois_field(p, n)
    for label in bell.all_labels(f):
        c = symmetry_class(label)
        v = bell.state_for(label).vector.to_complex().reshape(-1)
        z = proportional(oracles.swap(v, f.q), v)
        if c.kind == "symmetric":
            assert z is not None and abs(z - 1) < 1e-9
        elif c.kind == "antisymmetric":
            assert z is not None and abs(z + 1) < 1e-9
        else:
            assert (z is None) == (not c.swap_eigenstate)


@pytest.mark.parametrize("p,n", [(2, 1), (2, 2), (2, 3)])
def test_characteristic_two_symmetry_follows_trace(p, n):
    f = galois_field(p, n)
    for mu, nu in itertools.product(f.nonzero(), f.enumeration):
        expected = "symmetric" if (nu * mu * mu).trace() == 0 else "antisymmetric"
        assert symmetry_class(Psi(mu, nu)).kind == expected
    for mu in f.enumeration:
        assert symmetry_class(PsiTilde(mu)).kind == "symmetric"


@pytest.mark.parametrize("p", [3, 5, 7])
def test_odd_tilde_states_swap_into_each_other(p):
    f = galois_field(p)
    for mu in f.nonzero():
        assert bell.swap(bell_tilde(mu).vector, p) == bell_tilde(-mu).vector
        assert symmetry_class(PsiTilde(mu)).kind == "none"


def sr1_holds(mu, nu):
    """Entrywise Lambda_{ab} = w^tr(nu mu^2) Lambda_{ba}, by float oracle."""
    lam = oracles.z_matrix(mu) @ oracles.x_matrix(nu * mu)
    return close(lam, oracles.omega(mu.field.p, (nu * mu * mu).trace()) * lam.T)


@pytest.mark.parametrize("p,n", [(2, 1), (2, 2), (2, 3)])
def test_sr1_in_characteristic_two(p, n):
    f = galois_field(p, n)
    assert all(sr1_holds(mu, nu) for mu, nu in itertools.product(f.enumeration, repeat=2))


@pytest.mark.parametrize("p,n", [(3, 1), (5, 1), (7, 1), (3, 2)])
def test_sr1_odd_characteristic_only_when_shift_vanishes(p, n):
    f = galois_field(p, n)
    for mu, nu in itertools.product(f.enumeration, repeat=2):
        assert sr1_holds(mu, nu) == (not (nu * mu))


# -- projector sums ---------------------------------------------------------------------


def _op(a, b):
    return to_matrix(a).tensor(to_matrix(b))


def test_two_qubit_projector_sums():
    f = galois_field(2)
    one = f.one
    xz = compose_ops(x_op(one), z_op(one))
    eye = ScaledMatrix.identity(2, 4, 4)
    target = (eye + _op(xz, xz)).divide_by_sqrt_base(2)
    ps = projector_sum(one)
    assert ps.holds and ps.lhs == target
    tilde = projector_sum_tilde(f)
    assert tilde.holds and tilde.lhs == (eye + _op(x_op(one), x_op(one))).divide_by_sqrt_base(2)


def test_qutrit_nu_zero_projector():
    f = galois_field(3)
    ps = projector_sum(f.zero)
    assert ps.holds
    diag = np.zeros((9, 9))
    for a in range(3):
        diag[a * 3 + a, a * 3 + a] = 1
    assert close(ps.lhs.to_complex(), diag)


@pytest.mark.parametrize("p,n", UP_TO_9)
def test_projector_sum_rhs_matches_oracle(p, n):
    f = galois_field(p, n)
    for nu in f.enumeration:
        rhs = sum(
            np.kron(
                oracles.x_matrix(lam * nu) @ oracles.z_matrix(-lam),
                oracles.x_matrix(lam * nu) @ oracles.z_matrix(lam),
            )
            for lam in f.enumeration
        ) / f.q
        assert close(projector_sum(nu).rhs.to_complex(), rhs)


@pytest.mark.parametrize("p,n", UP_TO_9 + [(7, 1)])
def test_projector_sum_over_shifted_family(p, n):
    f = galois_field(p, n)
    assert all(projector_sum_shifted(nu).holds for nu in f.enumeration)
    assert projector_sum_tilde(f).holds


@pytest.mark.parametrize("p,n", UP_TO_9)
def test_projector_sum_over_lambda_family(p, n):
    f = galois_field(p, n)
    holds = [projector_sum(nu).holds for nu in f.enumeration]
    assert holds == [p == 2 or not nu for nu in f.enumeration]


# -- GF(4) two-qubit coordinates ---------------------------------------------------------------


def test_qubit_coordinates_restricted_to_gf4():
    with pytest.raises(FieldError):
        qubit_coordinates(bell_tilde(galois_field(3).one))


def test_tilde_coordinate_formula():
    f = galois_field(2, 2)
    b = find_selfdual(f)
    for m1, m2 in itertools.product((0, 1), repeat=2):
        mu = compose((m1, m2), b)
        assert qubit_coordinates(bell_tilde_from_lambda(mu), b) == bell.widetext_tilde(m1, m2)


def test_eq1_value_classifies_lambda_states():
    f = galois_field(2, 2)
    b = find_selfdual(f)
    for m1, n1, m2, n2 in itertools.product((0, 1), repeat=4):
        mu, nu = compose((m1, m2), b), compose((n1, n2), b)
        if not mu:
            continue
        value = (m1 * n2 + m2 * n1) % 2
        assert value == (nu * mu * mu).trace()
        assert symmetry_class(Psi(mu, nu)).kind == ("symmetric" if value == 0 else "antisymmetric")


def test_label_1100():
    f = galois_field(2, 2)
    b = find_selfdual(f)
    mu, nu = compose((1, 0), b), compose((1, 0), b)
    assert (1 * 0 + 0 * 1) % 2 == 0
    assert symmetry_class(Psi(mu, nu)).kind == "symmetric"
    assert bell.swap_phase(bell.widetext_state(1, 1, 0, 0), 4) == 1


def test_widetext_comparison_report():
    recs = bell.compare_widetext()
    assert len(recs) == 16
    assert sum(r.phase is not None for r in recs) == 8
    assert len({r.matched for r in recs}) == 14
    assert all(r.matched is not None for r in recs)
