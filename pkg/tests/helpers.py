"""Shared random-object generators for the test suite.

numpy.linalg is used here as an oracle independent of the package's own
Jacobi eigensolver.
"""

import numpy as np


def random_density(rng, dim):
    g = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
    rho = g @ g.conj().T
    return rho / np.trace(rho).real


def random_pure(rng, dim):
    psi = rng.normal(size=dim) + 1j * rng.normal(size=dim)
    psi /= np.linalg.norm(psi)
    return np.outer(psi, psi.conj())


def random_product(rng):
    return np.kron(random_density(rng, 2), random_density(rng, 2))


def haar_unitary(rng, dim):
    z = (rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))) / np.sqrt(2)
    qmat, r = np.linalg.qr(z)
    phases = np.diag(r) / np.abs(np.diag(r))
    return qmat @ np.diag(phases.conj())


def random_distribution(rng, n):
    p = rng.random(n) + 1e-6
    return p / p.sum()


def random_joint(rng, rows=3, cols=3):
    j = rng.random((rows, cols)) + 1e-6
    return j / j.sum()
