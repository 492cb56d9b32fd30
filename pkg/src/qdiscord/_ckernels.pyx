# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled measurement-entropy kernels.

Same contract as qdiscord._kernels_py (see its docstring for the math);
this version runs the grid scan with the GIL released so sweep drivers
can use real thread parallelism.
"""

from libc.math cimport cos, sin, sqrt, log, pow

import numpy as np

cdef double P_FLOOR = 1e-14
cdef double EIG_FLOOR = 1e-12


cdef inline double _pair_entropy(double e0, double e1, double q) noexcept nogil:
    cdef double acc = 0.0
    if q == 1.0:
        if e0 > EIG_FLOOR:
            acc -= e0 * log(e0)
        if e1 > EIG_FLOOR:
            acc -= e1 * log(e1)
        return acc
    if e0 > EIG_FLOOR:
        acc += pow(e0, q)
    if e1 > EIG_FLOOR:
        acc += pow(e1, q)
    return (1.0 - acc) / (q - 1.0)


cdef inline double _block_entropy(double m00, double m11, double complex m01,
                                  double p, double q) noexcept nogil:
    cdef double det, disc, root, e0, e1
    if p <= P_FLOOR:
        return 0.0
    det = m00 * m11 - (m01.real * m01.real + m01.imag * m01.imag)
    disc = 0.25 - det / (p * p)
    if disc < 0.0:
        disc = 0.0
    root = sqrt(disc)
    e0 = 0.5 + root
    e1 = 0.5 - root
    if e0 > 1.0:
        e0 = 1.0
    if e1 < 0.0:
        e1 = 0.0
    return _pair_entropy(e0, e1, q)


cdef double _cond_entropy(const double complex[:, ::1] r,
                          double a00, double a11, double complex a01,
                          double theta, double phi,
                          double q, bint escort) noexcept nogil:
    cdef double ct = cos(0.5 * theta)
    cdef double st = sin(0.5 * theta)
    cdef double complex b1 = st * cos(phi) + 1j * (st * sin(phi))
    cdef double complex cb1 = b1.real - 1j * b1.imag
    cdef double ct2 = ct * ct
    cdef double st2 = st * st
    cdef double complex ctb1 = ct * b1
    cdef double complex ctcb1 = ct * cb1
    cdef double m00 = (ct2 * r[0, 0] + ctb1 * r[0, 1]
                       + ctcb1 * r[1, 0] + st2 * r[1, 1]).real
    cdef double m11 = (ct2 * r[2, 2] + ctb1 * r[2, 3]
                       + ctcb1 * r[3, 2] + st2 * r[3, 3]).real
    cdef double complex m01 = (ct2 * r[0, 2] + ctb1 * r[0, 3]
                               + ctcb1 * r[1, 2] + st2 * r[1, 3])
    cdef double p0 = m00 + m11
    cdef double p1 = 1.0 - p0
    cdef double t0 = _block_entropy(m00, m11, m01, p0, q)
    cdef double t1 = _block_entropy(a00 - m00, a11 - m11, a01 - m01, p1, q)
    cdef double num = 0.0
    cdef double den = 0.0
    cdef double w
    if escort and q != 1.0:
        if p0 > P_FLOOR:
            w = pow(p0, q)
            num += w * t0
            den += w
        if p1 > P_FLOOR:
            w = pow(p1, q)
            num += w * t1
            den += w
        return num / den
    if p0 > P_FLOOR:
        num += p0 * t0
    if p1 > P_FLOOR:
        num += p1 * t1
    return num


def cond_entropy_angles(rho, double theta, double phi, double q, bint escort):
    """Measured conditional entropy for a single (theta, phi)."""
    cdef const double complex[:, ::1] r = np.ascontiguousarray(rho, dtype=np.complex128)
    if r.shape[0] != 4 or r.shape[1] != 4:
        raise ValueError("kernel expects a 4x4 state")
    cdef double a00 = (r[0, 0] + r[1, 1]).real
    cdef double a11 = (r[2, 2] + r[3, 3]).real
    cdef double complex a01 = r[0, 2] + r[1, 3]
    return _cond_entropy(r, a00, a11, a01, theta, phi, q, escort)


def cond_entropy_grid(rho, thetas, phis, double q, bint escort):
    """Measured conditional entropy over a (theta x phi) grid."""
    cdef const double complex[:, ::1] r = np.ascontiguousarray(rho, dtype=np.complex128)
    if r.shape[0] != 4 or r.shape[1] != 4:
        raise ValueError("kernel expects a 4x4 state")
    cdef const double[::1] th = np.ascontiguousarray(thetas, dtype=np.float64)
    cdef const double[::1] ph = np.ascontiguousarray(phis, dtype=np.float64)
    out_arr = np.empty((th.shape[0], ph.shape[0]), dtype=np.float64)
    cdef double[:, ::1] out = out_arr
    cdef double a00 = (r[0, 0] + r[1, 1]).real
    cdef double a11 = (r[2, 2] + r[3, 3]).real
    cdef double complex a01 = r[0, 2] + r[1, 3]
    cdef Py_ssize_t i, j
    with nogil:
        for i in range(th.shape[0]):
            for j in range(ph.shape[0]):
                out[i, j] = _cond_entropy(r, a00, a11, a01, th[i], ph[j], q, escort)
    return out_arr
