# cython: language_level=3
"""Compiled Monte Carlo trial kernels.

Mirrors ``bepalloc._kernels._py`` operation for operation (same multiplies,
adds and comparisons per element; compiled with FP contraction disabled),
so both backends return bit-identical results for identical input arrays.
"""

from libc.math cimport NAN
from libc.stdlib cimport free, malloc

import numpy as np


def count_infeasible_max(double[::1] gain_b, double[:, ::1] gains_e,
                         double[::1] weights, double y_weight):
    cdef Py_ssize_t n = gain_b.shape[0]
    cdef Py_ssize_t n_e = gains_e.shape[1]
    cdef Py_ssize_t i, e
    cdef long bad = 0
    cdef double z, v
    with nogil:
        for i in range(n):
            z = weights[0] * gains_e[i, 0]
            for e in range(1, n_e):
                v = weights[e] * gains_e[i, e]
                if v > z:
                    z = v
            if z > y_weight * gain_b[i]:
                bad += 1
    return bad


def count_infeasible_sum(double[::1] gain_b, double[:, ::1] gains_e,
                         double[::1] weights, double y_weight):
    cdef Py_ssize_t n = gain_b.shape[0]
    cdef Py_ssize_t n_e = gains_e.shape[1]
    cdef Py_ssize_t i, e
    cdef long bad = 0
    cdef double z
    with nogil:
        for i in range(n):
            z = weights[0] * gains_e[i, 0]
            for e in range(1, n_e):
                z = z + weights[e] * gains_e[i, e]
            if z > y_weight * gain_b[i]:
                bad += 1
    return bad


def count_block_failures(double[:, ::1] uniforms, double p, long t):
    cdef Py_ssize_t blocks = uniforms.shape[0]
    cdef Py_ssize_t nbits = uniforms.shape[1]
    cdef Py_ssize_t i, j
    cdef long errors, failed = 0
    with nogil:
        for i in range(blocks):
            errors = 0
            for j in range(nbits):
                if uniforms[i, j] < p:
                    errors += 1
            if errors > t:
                failed += 1
    return failed


def beamforming_batch(double[:, ::1] hb_re, double[:, ::1] hb_im,
                      double[:, :, ::1] he_re, double[:, :, ::1] he_im,
                      double c1, double c2, double sigma2,
                      double[::1] p_total, unsigned char[::1] feasible):
    """See the fallback backend for the algorithm description."""
    cdef Py_ssize_t n = hb_re.shape[0]
    cdef Py_ssize_t m = hb_re.shape[1]
    cdef Py_ssize_t n_e = he_re.shape[1]
    cdef Py_ssize_t i, e, k, estar, kmin
    cdef long bad = 0
    cdef double sc1 = sigma2 * c1
    cdef double c2s = c2 * sigma2
    cdef double hb2, g, gsel, vmin, d_re, d_im, s_re, s_im, pn2, vn2, wn2
    cdef double t_re, t_im, delta, p_d, p_an, q_re, q_im, u_re, u_im
    cdef double g_de, g_ae, numer, denom, req
    cdef bint blocked, use_proj
    cdef double *w_re = <double *> malloc(2 * m * sizeof(double))
    cdef double *w_im
    if w_re == NULL:
        raise MemoryError()
    w_im = w_re + m
    try:
        with nogil:
            for i in range(n):
                hb2 = hb_re[i, 0] * hb_re[i, 0] + hb_im[i, 0] * hb_im[i, 0]
                for k in range(1, m):
                    hb2 = hb2 + (hb_re[i, k] * hb_re[i, k] + hb_im[i, k] * hb_im[i, k])

                estar = 0
                gsel = he_re[i, 0, 0] * he_re[i, 0, 0] + he_im[i, 0, 0] * he_im[i, 0, 0]
                for k in range(1, m):
                    gsel = gsel + (he_re[i, 0, k] * he_re[i, 0, k] + he_im[i, 0, k] * he_im[i, 0, k])
                for e in range(1, n_e):
                    g = he_re[i, e, 0] * he_re[i, e, 0] + he_im[i, e, 0] * he_im[i, e, 0]
                    for k in range(1, m):
                        g = g + (he_re[i, e, k] * he_re[i, e, k] + he_im[i, e, k] * he_im[i, e, k])
                    if g > gsel:
                        gsel = g
                        estar = e

                d_re = hb_re[i, 0] * he_re[i, estar, 0] + hb_im[i, 0] * he_im[i, estar, 0]
                d_im = hb_re[i, 0] * he_im[i, estar, 0] - hb_im[i, 0] * he_re[i, estar, 0]
                for k in range(1, m):
                    d_re = d_re + (hb_re[i, k] * he_re[i, estar, k] + hb_im[i, k] * he_im[i, estar, k])
                    d_im = d_im + (hb_re[i, k] * he_im[i, estar, k] - hb_im[i, k] * he_re[i, estar, k])
                s_re = d_re / hb2
                s_im = d_im / hb2
                pn2 = 0.0
                for k in range(m):
                    w_re[k] = he_re[i, estar, k] - (s_re * hb_re[i, k] - s_im * hb_im[i, k])
                    w_im[k] = he_im[i, estar, k] - (s_re * hb_im[i, k] + s_im * hb_re[i, k])
                    if k == 0:
                        pn2 = w_re[0] * w_re[0] + w_im[0] * w_im[0]
                    else:
                        pn2 = pn2 + (w_re[k] * w_re[k] + w_im[k] * w_im[k])

                use_proj = pn2 > 1e-12 * gsel
                if use_proj:
                    wn2 = pn2
                else:
                    kmin = 0
                    vmin = hb_re[i, 0] * hb_re[i, 0] + hb_im[i, 0] * hb_im[i, 0]
                    for k in range(1, m):
                        g = hb_re[i, k] * hb_re[i, k] + hb_im[i, k] * hb_im[i, k]
                        if g < vmin:
                            vmin = g
                            kmin = k
                    t_re = hb_re[i, kmin] / hb2
                    t_im = -hb_im[i, kmin] / hb2
                    vn2 = 0.0
                    for k in range(m):
                        delta = 1.0 if k == kmin else 0.0
                        w_re[k] = delta - (t_re * hb_re[i, k] - t_im * hb_im[i, k])
                        w_im[k] = -(t_re * hb_im[i, k] + t_im * hb_re[i, k])
                        if k == 0:
                            vn2 = w_re[0] * w_re[0] + w_im[0] * w_im[0]
                        else:
                            vn2 = vn2 + (w_re[k] * w_re[k] + w_im[k] * w_im[k])
                    wn2 = vn2

                p_d = sc1 / hb2
                p_an = 0.0
                blocked = 0
                for e in range(n_e):
                    q_re = he_re[i, e, 0] * hb_re[i, 0] + he_im[i, e, 0] * hb_im[i, 0]
                    q_im = he_re[i, e, 0] * hb_im[i, 0] - he_im[i, e, 0] * hb_re[i, 0]
                    u_re = he_re[i, e, 0] * w_re[0] + he_im[i, e, 0] * w_im[0]
                    u_im = he_re[i, e, 0] * w_im[0] - he_im[i, e, 0] * w_re[0]
                    for k in range(1, m):
                        q_re = q_re + (he_re[i, e, k] * hb_re[i, k] + he_im[i, e, k] * hb_im[i, k])
                        q_im = q_im + (he_re[i, e, k] * hb_im[i, k] - he_im[i, e, k] * hb_re[i, k])
                        u_re = u_re + (he_re[i, e, k] * w_re[k] + he_im[i, e, k] * w_im[k])
                        u_im = u_im + (he_re[i, e, k] * w_im[k] - he_im[i, e, k] * w_re[k])
                    g_de = (q_re * q_re + q_im * q_im) / hb2
                    g_ae = (u_re * u_re + u_im * u_im) / wn2
                    numer = g_de * p_d - c2s
                    if numer > 0.0:
                        if g_ae == 0.0:
                            blocked = 1
                        else:
                            denom = c2 * g_ae
                            req = numer / denom
                            if req > p_an:
                                p_an = req

                if blocked:
                    p_total[i] = NAN
                    feasible[i] = 0
                    bad += 1
                else:
                    p_total[i] = p_d + p_an
                    feasible[i] = 1
    finally:
        free(w_re)
    return bad
