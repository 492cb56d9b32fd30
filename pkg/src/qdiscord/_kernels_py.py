"""Pure numpy implementation of the measurement-entropy kernels.

Hot path of the measurement optimizer: given a two-qubit state and the
Bloch angles (theta, phi) of the outcome-0 projector axis on qubit B,
compute the conditional entropy of the post-measurement ensemble without
materializing 4x4 post-measurement states.  Conditioning on outcome k
reduces rho to the 2x2 block M_k[i,i'] = <i b_k| rho |i' b_k>, whose
trace is p_k and whose normalized eigenvalues carry the whole spectrum
of rho_k; the complementary block is rho_A - M_0.

``q == 1.0`` selects von Neumann entropies (used by the standard-discord
baseline); otherwise Tsallis entropies of rank q.  ``escort`` picks the
q-expectation weighting p**q / sum(p**q) instead of plain probabilities.

The compiled extension qdiscord._ckernels implements the same two
functions; qdiscord.backend selects between them at import time.
"""

from __future__ import annotations

import math

import numpy as np

P_FLOOR = 1e-14
EIG_FLOOR = 1e-12


def _pair_entropy(e0: float, e1: float, q: float) -> float:
    if q == 1.0:
        acc = 0.0
        if e0 > EIG_FLOOR:
            acc -= e0 * math.log(e0)
        if e1 > EIG_FLOOR:
            acc -= e1 * math.log(e1)
        return acc
    acc = 0.0
    if e0 > EIG_FLOOR:
        acc += e0**q
    if e1 > EIG_FLOOR:
        acc += e1**q
    return (1.0 - acc) / (q - 1.0)


def _combine(p0, t0, p1, t1, q, escort):
    num = 0.0
    den = 0.0
    if escort and q != 1.0:
        if p0 > P_FLOOR:
            w = p0**q
            num += w * t0
            den += w
        if p1 > P_FLOOR:
            w = p1**q
            num += w * t1
            den += w
        return num / den
    if p0 > P_FLOOR:
        num += p0 * t0
    if p1 > P_FLOOR:
        num += p1 * t1
    return num


def cond_entropy_angles(rho, theta, phi, q, escort) -> float:
    """Measured conditional entropy for a single (theta, phi)."""
    r = [complex(x) for x in np.asarray(rho, dtype=complex).ravel()]
    ct = math.cos(0.5 * theta)
    st = math.sin(0.5 * theta)
    b1 = complex(st * math.cos(phi), st * math.sin(phi))
    cb1 = b1.conjugate()
    ct2 = ct * ct
    st2 = st * st
    # M0[i,i'] = ct^2 rho[2i,2i'] + ct*b1 rho[2i,2i'+1]
    #          + ct*conj(b1) rho[2i+1,2i'] + |b1|^2 rho[2i+1,2i'+1]
    m00 = (ct2 * r[0] + ct * b1 * r[1] + ct * cb1 * r[4] + st2 * r[5]).real
    m11 = (ct2 * r[10] + ct * b1 * r[11] + ct * cb1 * r[14] + st2 * r[15]).real
    m01 = ct2 * r[2] + ct * b1 * r[3] + ct * cb1 * r[6] + st2 * r[7]
    a00 = (r[0] + r[5]).real
    a11 = (r[10] + r[15]).real
    a01 = r[2] + r[7]
    p0 = m00 + m11
    p1 = 1.0 - p0
    t0 = _block_entropy(m00, m11, m01, p0, q)
    t1 = _block_entropy(a00 - m00, a11 - m11, a01 - m01, p1, q)
    return _combine(p0, t0, p1, t1, q, escort)


def _block_entropy(m00, m11, m01, p, q):
    if p <= P_FLOOR:
        return 0.0
    det = m00 * m11 - (m01.real * m01.real + m01.imag * m01.imag)
    disc = 0.25 - det / (p * p)
    if disc < 0.0:
        disc = 0.0
    root = math.sqrt(disc)
    e0 = min(0.5 + root, 1.0)
    e1 = max(0.5 - root, 0.0)
    return _pair_entropy(e0, e1, q)


def cond_entropy_grid(rho, thetas, phis, q, escort) -> np.ndarray:
    """Measured conditional entropy over a (theta x phi) grid, vectorized."""
    a = np.asarray(rho, dtype=complex)
    thetas = np.asarray(thetas, dtype=float)
    phis = np.asarray(phis, dtype=float)
    r4 = a.reshape(2, 2, 2, 2)
    th = thetas[:, None]
    ph = phis[None, :]
    ct = np.cos(0.5 * th) + 0.0 * ph
    st = np.sin(0.5 * th) + 0.0 * ph
    b = np.empty(ct.shape + (2,), dtype=complex)
    b[..., 0] = ct
    b[..., 1] = st * np.exp(1j * ph)
    m = np.einsum("...j,ijkl,...l->...ik", b.conj(), r4, b)
    m00 = m[..., 0, 0].real
    m11 = m[..., 1, 1].real
    m01 = m[..., 0, 1]
    rho_a = np.einsum("ijkj->ik", r4)
    p0 = m00 + m11
    p1 = 1.0 - p0
    t0 = _block_entropy_arr(m00, m11, m01, p0, q)
    t1 = _block_entropy_arr(
        rho_a[0, 0].real - m00, rho_a[1, 1].real - m11, rho_a[0, 1] - m01, p1, q
    )
    alive0 = p0 > P_FLOOR
    alive1 = p1 > P_FLOOR
    if escort and q != 1.0:
        w0 = np.where(alive0, np.where(alive0, p0, 1.0) ** q, 0.0)
        w1 = np.where(alive1, np.where(alive1, p1, 1.0) ** q, 0.0)
        return (w0 * t0 + w1 * t1) / (w0 + w1)
    return np.where(alive0, p0 * t0, 0.0) + np.where(alive1, p1 * t1, 0.0)


def _block_entropy_arr(m00, m11, m01, p, q):
    safe_p = np.where(p > P_FLOOR, p, 1.0)
    det = m00 * m11 - (m01.real**2 + m01.imag**2)
    disc = np.maximum(0.25 - det / safe_p**2, 0.0)
    root = np.sqrt(disc)
    e0 = np.minimum(0.5 + root, 1.0)
    e1 = np.maximum(0.5 - root, 0.0)
    if q == 1.0:
        s0 = np.where(e0 > EIG_FLOOR, -e0 * np.log(np.where(e0 > EIG_FLOOR, e0, 1.0)), 0.0)
        s1 = np.where(e1 > EIG_FLOOR, -e1 * np.log(np.where(e1 > EIG_FLOOR, e1, 1.0)), 0.0)
        return s0 + s1
    s0 = np.where(e0 > EIG_FLOOR, np.where(e0 > EIG_FLOOR, e0, 1.0) ** q, 0.0)
    s1 = np.where(e1 > EIG_FLOOR, np.where(e1 > EIG_FLOOR, e1, 1.0) ** q, 0.0)
    return (1.0 - s0 - s1) / (q - 1.0)
