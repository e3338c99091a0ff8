import itertools

import numpy as np
import pytest
from hypothesis import given, strategies as st

from mubell.cyclotomic import CycInt, ScaledMatrix, root_power
from mubell.galois import find_selfdual, galois_field
from mubell.pauli import (
    PauliMonomial,
    check_factorization,
    commutes,
    compose,
    factor_selfdual,
    hs_trace_inner,
    identity,
    lambda_class,
    lambda_tilde,
    tensor_matrix,
    to_matrix,
    to_product_layout,
    x_op,
    z_op,
)

from oracles import close, omega, x_matrix, z_matrix

SMALL = [(2, 1), (3, 1), (2, 2), (5, 1), (7, 1), (2, 3), (3, 2)]


def ket(f, a):
    v = np.zeros(f.q)
    v[f.index(a)] = 1
    return v


def test_single_qudit_actions():
    g2, g3, g4 = galois_field(2), galois_field(3), galois_field(2, 2)
    assert close(to_matrix(x_op(g2.one)).to_complex() @ ket(g2, g2.zero), ket(g2, g2.one))
    two = g3.from_int(2)
    assert close(to_matrix(z_op(g3.one)).to_complex() @ ket(g3, two), omega(3, 2) * ket(g3, two))
    s = g4.primitive
    assert close(to_matrix(z_op(s)).to_complex() @ ket(g4, s), -ket(g4, s))


def test_matrix_forms():
    g2, g3 = galois_field(2), galois_field(3)
    assert to_matrix(x_op(g2.one)) == ScaledMatrix.from_entries(2, 4, [[0, 1], [1, 0]])
    assert to_matrix(z_op(g2.one)) == ScaledMatrix.from_entries(2, 4, [[1, 0], [0, -1]])
    w = root_power(3, 1)
    diag = ScaledMatrix.from_entries(3, 3, [[1, 0, 0], [0, w, 0], [0, 0, w * w]])
    assert to_matrix(z_op(g3.one)) == diag


def test_qubit_commutation_sign():
    g2 = galois_field(2)
    z, x = z_op(g2.one), x_op(g2.one)
    zx = to_matrix(compose(z, x))
    xz = to_matrix(compose(x, z))
    assert zx == xz.times(CycInt(4, [-1]))


def test_qutrit_weyl_phase():
    g3 = galois_field(3)
    z, x = z_op(g3.one), x_op(g3.one)
    assert compose(z, x).phase == 0
    assert compose(x, z).phase == 2
    w = root_power(3, 1)
    assert to_matrix(compose(z, x)) == (to_matrix(x) @ to_matrix(z)).times(w)


def test_identity_is_neutral():
    for p, n in SMALL:
        f = galois_field(p, n)
        for a in (x_op(f.primitive), z_op(f.primitive), lambda_class(f.primitive, f.one)):
            assert compose(a, identity(f)) == a
            assert compose(identity(f), a) == a


def test_lambda_examples():
    g2, g3 = galois_field(2), galois_field(3)
    one = g2.one
    assert lambda_class(one, one) == compose(z_op(one), x_op(one))
    assert lambda_class(one, g2.zero) == z_op(one)
    two = g3.from_int(2)
    assert lambda_class(two, g3.one) == PauliMonomial(g3, 0, two, two)
    assert lambda_tilde(one) == x_op(one)


def test_hs_inner_examples():
    g2, g3 = galois_field(2), galois_field(3)
    one = g3.one
    assert hs_trace_inner(lambda_class(one, g3.zero), lambda_class(one, g3.zero)) == 3
    assert hs_trace_inner(lambda_class(one, g3.zero), lambda_class(one, one)) == 0
    assert hs_trace_inner(lambda_tilde(g2.one), lambda_tilde(g2.one)) == 2


@pytest.mark.parametrize("p,n", SMALL)
def test_matrices_match_oracle(p, n):
    f = galois_field(p, n)
    for mu in f.enumeration:
        assert close(to_matrix(x_op(mu)).to_complex(), x_matrix(mu))
        assert close(to_matrix(z_op(mu)).to_complex(), z_matrix(mu))


@pytest.mark.parametrize("p,n", SMALL)
def test_weyl_relation_exhaustive(p, n):
    f = galois_field(p, n)
    for mu, nu in itertools.product(f.enumeration, repeat=2):
        lhs = z_matrix(mu) @ x_matrix(nu)
        rhs = omega(p, (mu * nu).trace()) * x_matrix(nu) @ z_matrix(mu)
        assert close(lhs, rhs)
        assert to_matrix(compose(z_op(mu), x_op(nu))) == to_matrix(compose(x_op(nu), z_op(mu))).times(
            f.additive_character(mu * nu)
        )


def monomials(p, n):
    f = galois_field(p, n)
    m = 4 if p == 2 else p
    return st.builds(
        lambda t, z, x: PauliMonomial(f, t, z, x),
        st.integers(0, m - 1),
        st.sampled_from(f.enumeration),
        st.sampled_from(f.enumeration),
    )


@pytest.mark.parametrize("p,n", SMALL)
@given(data=st.data())
def test_homomorphism(p, n, data):
    a = data.draw(monomials(p, n))
    b = data.draw(monomials(p, n))
    assert to_matrix(compose(a, b)) == to_matrix(a) @ to_matrix(b)
    assert to_matrix(a.adjoint()) == to_matrix(a).adjoint()
    assert commutes(a, b) == (to_matrix(a) @ to_matrix(b) == to_matrix(b) @ to_matrix(a))


@pytest.mark.parametrize("p,n", SMALL)
def test_classes_are_maximal_commuting_sets(p, n):
    f = galois_field(p, n)
    classes = [[lambda_class(mu, nu) for mu in f.nonzero()] for nu in f.enumeration]
    classes.append([lambda_tilde(mu) for mu in f.nonzero()])
    for cls in classes:
        assert all(commutes(a, b) for a, b in itertools.combinations(cls, 2))
    everything = [a for cls in classes for a in cls]
    assert len({(a.z, a.x) for a in everything}) == f.q**2 - 1
    for i, cls in enumerate(classes):
        for j, other in enumerate(classes):
            if i != j:
                for b in other:
                    assert not all(commutes(a, b) for a in cls)


@pytest.mark.parametrize("p,n", SMALL)
def test_trace_orthogonality(p, n):
    f = galois_field(p, n)
    ops = [lambda_class(mu, nu) for mu in f.nonzero() for nu in f.enumeration]
    ops += [lambda_tilde(mu) for mu in f.nonzero()]
    for a, b in itertools.product(ops, repeat=2):
        value = np.trace(to_matrix(a).to_complex() @ to_matrix(b).to_complex().conj().T)
        expected = f.q if a == b else 0
        assert abs(value - expected) < 1e-9
        assert hs_trace_inner(a, b) == expected


def test_gf4_factorization_examples():
    f = galois_field(2, 2)
    b = find_selfdual(f)
    s = f.primitive
    g2 = galois_field(2)
    fx = factor_selfdual(x_op(s), b)
    assert fx == [x_op(g2.one), identity(g2)]
    fz = factor_selfdual(z_op(f.one), b)
    assert fz == [z_op(g2.one), z_op(g2.one)]
    assert all(a.is_identity() for a in factor_selfdual(x_op(f.zero), b))


@pytest.mark.parametrize("p,n", [(2, 2), (2, 3), (3, 2), (2, 4), (5, 2)])
def test_factorization_reproduces_matrices(p, n):
    f = galois_field(p, n)
    b = find_selfdual(f)
    for mu in f.enumeration:
        for op in (x_op(mu), z_op(mu)):
            assert check_factorization(op, b)
            assert tensor_matrix(factor_selfdual(op, b)) == to_product_layout(to_matrix(op), b)


def test_factorization_rejects_phases():
    f = galois_field(2, 2)
    with pytest.raises(ValueError):
        factor_selfdual(PauliMonomial(f, 1, f.one, f.zero), find_selfdual(f))


def test_text_form():
    f = galois_field(3, 2)
    assert str(PauliMonomial(f, 4, f.one, f.primitive)) == "w^1 Z[1,0] X[0,1]"
