# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled Rota-Baxter enumeration kernel over 64-bit integers.

Mirrors homtwist._rbkernel_py.enumerate_rb line for line.  Callers pre-scale
everything to integers and guarantee (homtwist.search does) that every
intermediate value fits in int64; otherwise the pure-Python twin is used.
"""

from libc.stdint cimport int64_t
from libc.stdlib cimport free, malloc

__all__ = ["enumerate_rb"]


cdef bint _rb_holds(int d, int64_t* r, int64_t* c, int64_t t,
                    int64_t de, int64_t dt, int64_t* u, int64_t* v) noexcept nogil:
    cdef int i, j, k, m, p, q, w_base, base
    cdef int64_t su, sv, lhs, rhs_main, rhs_theta, rpi, rkm
    for i in range(d):
        for j in range(d):
            for m in range(d):
                su = 0
                sv = 0
                for p in range(d):
                    su += r[p * d + i] * c[(p * d + j) * d + m]
                    sv += r[p * d + j] * c[(i * d + p) * d + m]
                u[m] = su
                v[m] = sv
            w_base = (i * d + j) * d
            for k in range(d):
                lhs = 0
                for p in range(d):
                    rpi = r[p * d + i]
                    if rpi != 0:
                        base = p * d
                        for q in range(d):
                            lhs += rpi * r[q * d + j] * c[(base + q) * d + k]
                rhs_main = 0
                rhs_theta = 0
                for m in range(d):
                    rkm = r[k * d + m]
                    if rkm != 0:
                        rhs_main += rkm * (u[m] + v[m])
                        rhs_theta += rkm * c[w_base + m]
                if dt * (lhs - rhs_main) != de * t * rhs_theta:
                    return False
    return True


def enumerate_rb(int dim, entries, c_flat, theta_scaled, de, dt, limit=-1):
    """Compiled counterpart of homtwist._rbkernel_py.enumerate_rb."""
    cdef int n2 = dim * dim
    cdef int n_entries = len(entries)
    cdef int64_t t = theta_scaled
    cdef int64_t de_c = de
    cdef int64_t dt_c = dt
    cdef long long lim = limit
    cdef int i, pos
    cdef int64_t* ent = <int64_t*> malloc(n_entries * sizeof(int64_t))
    cdef int64_t* c = <int64_t*> malloc(len(c_flat) * sizeof(int64_t))
    cdef int64_t* r = <int64_t*> malloc(n2 * sizeof(int64_t))
    cdef int* digits = <int*> malloc(n2 * sizeof(int))
    cdef int64_t* u = <int64_t*> malloc(dim * sizeof(int64_t))
    cdef int64_t* v = <int64_t*> malloc(dim * sizeof(int64_t))
    if ent == NULL or c == NULL or r == NULL or digits == NULL or u == NULL or v == NULL:
        if ent != NULL:
            free(ent)
        if c != NULL:
            free(c)
        if r != NULL:
            free(r)
        if digits != NULL:
            free(digits)
        if u != NULL:
            free(u)
        if v != NULL:
            free(v)
        raise MemoryError()
    results = []
    try:
        for i in range(n_entries):
            ent[i] = entries[i]
        for i in range(len(c_flat)):
            c[i] = c_flat[i]
        for i in range(n2):
            digits[i] = 0
            r[i] = ent[0]
        while True:
            if _rb_holds(dim, r, c, t, de_c, dt_c, u, v):
                results.append(tuple([digits[i] for i in range(n2)]))
                if 0 <= lim == len(results):
                    break
            pos = n2 - 1
            while pos >= 0 and digits[pos] == n_entries - 1:
                digits[pos] = 0
                r[pos] = ent[0]
                pos -= 1
            if pos < 0:
                break
            digits[pos] += 1
            r[pos] = ent[digits[pos]]
    finally:
        free(ent)
        free(c)
        free(r)
        free(digits)
        free(u)
        free(v)
    return results
