"""Floating-point reference implementations used only as test oracles.

They recompute quantities straight from their defining formulas with numpy
complex arithmetic and share no code with the exact implementation beyond
field element enumeration.
"""

import cmath

import numpy as np


def omega(m, k=1):
    return cmath.exp(2j * cmath.pi * k / m)


def trace_by_frobenius(a):
    """Field trace as the sum of Frobenius images, read off the constant coefficient."""
    f = a.field
    total = f.zero
    x = a
    for _ in range(f.n):
        total = total + x
        x = x**f.p
    assert all(c == 0 for c in total.coeffs[1:])
    return total.coeffs[0]


def chi(a):
    return omega(a.field.p, trace_by_frobenius(a))


def x_matrix(mu):
    f = mu.field
    q = f.q
    out = np.zeros((q, q), dtype=complex)
    for j, lam in enumerate(f.enumeration):
        out[f.index(lam + mu), j] = 1
    return out


def z_matrix(mu):
    f = mu.field
    return np.diag([chi(mu * lam) for lam in f.enumeration])


def fourier(f):
    q = f.q
    return np.array([[chi(a * b) for b in f.enumeration] for a in f.enumeration]) / np.sqrt(q)


def bell_direct(mu, nu):
    f = mu.field
    q = f.q
    v = np.zeros(q * q, dtype=complex)
    for lam in f.enumeration:
        v[f.index(lam) * q + f.index(lam + nu)] += chi(mu * lam)
    return v / np.sqrt(q)


def bell_tilde(mu):
    f = mu.field
    q = f.q
    v = np.zeros(q * q, dtype=complex)
    for lam in f.enumeration:
        v[f.index(lam) * q + f.index(lam + mu)] = 1
    return v / np.sqrt(q)


def bell_lambda(mu, nu):
    """Amplitudes = matrix elements of Z_mu X_{nu mu}."""
    op = z_matrix(mu) @ x_matrix(nu * mu)
    return op.reshape(-1) / np.sqrt(mu.field.q)


def swap(v, q):
    return v.reshape(q, q).T.reshape(-1)


def partial_trace(v, q, side):
    amp = v.reshape(q, q)
    if side == "A":
        return amp @ amp.conj().T
    return (amp.conj().T @ amp).T


def close(a, b, tol=1e-9):
    return np.allclose(a, b, atol=tol)


def proportional(a, b, tol=1e-9):
    """Return the unit phase z with a = z b, or None."""
    a = np.asarray(a).reshape(-1)
    b = np.asarray(b).reshape(-1)
    k = int(np.argmax(np.abs(b)))
    if abs(b[k]) < tol:
        return None
    z = a[k] / b[k]
    if abs(abs(z) - 1) > 1e-7 or not np.allclose(a, z * b, atol=tol):
        return None
    return z
