# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled particle-ensemble kernels (see ``_pykernels`` for the reference)."""
import numpy as np


def apply_field(const double[::1] cos_phi, signed char[::1] signs, double h, int direction):
    cdef Py_ssize_t i, n = cos_phi.shape[0]
    cdef signed char d = <signed char>direction
    cdef Py_ssize_t flips = 0
    cdef int f
    # branchless: the switch decision is random per particle
    with nogil:
        for i in range(n):
            f = (signs[i] != d) & (cos_phi[i] <= h)
            signs[i] = d if f else signs[i]
            flips += f
    return flips


def net_magnetization(const double[::1] cos_phi, const signed char[::1] signs):
    cdef Py_ssize_t i, n = cos_phi.shape[0]
    cdef double num = 0.0, den = 0.0
    with nogil:
        for i in range(n):
            num += signs[i] * cos_phi[i]
            den += cos_phi[i]
    return num / den


def apply_field_cells(const double[:, ::1] cos_phi, signed char[:, ::1] signs,
                      double h, const signed char[::1] directions):
    cdef Py_ssize_t c, i
    cdef Py_ssize_t rows = cos_phi.shape[0], n = cos_phi.shape[1]
    cdef Py_ssize_t flips = 0
    cdef signed char d
    cdef int f
    with nogil:
        for c in range(rows):
            d = directions[c]
            for i in range(n):
                f = (signs[c, i] != d) & (cos_phi[c, i] <= h)
                signs[c, i] = d if f else signs[c, i]
                flips += f
    return flips


def net_magnetization_cells(const double[:, ::1] cos_phi, const signed char[:, ::1] signs):
    cdef Py_ssize_t c, i
    cdef Py_ssize_t rows = cos_phi.shape[0], n = cos_phi.shape[1]
    out = np.empty(rows, dtype=np.float64)
    cdef double[::1] m = out
    cdef double num, den
    with nogil:
        for c in range(rows):
            num = 0.0
            den = 0.0
            for i in range(n):
                num += signs[c, i] * cos_phi[c, i]
                den += cos_phi[c, i]
            m[c] = num / den
    return out
