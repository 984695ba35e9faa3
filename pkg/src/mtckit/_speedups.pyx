# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled polynomial kernel: integer convolution and reduction.

Coefficients stay Python ints (they are exact and can exceed 64 bits);
the win over the pure-Python kernel is eliminating interpreter dispatch
in the double loops. mtckit._poly_py is the drop-in fallback.
"""


def poly_mul(list a, list b):
    """Convolution of two int coefficient lists."""
    cdef Py_ssize_t la = len(a)
    cdef Py_ssize_t lb = len(b)
    cdef Py_ssize_t i, j
    cdef list out = [0] * (la + lb - 1)
    cdef object ai, bj
    for i in range(la):
        ai = a[i]
        if ai:
            for j in range(lb):
                bj = b[j]
                if bj:
                    out[i + j] = out[i + j] + ai * bj
    return out


def poly_reduce(list p, mod):
    """Reduce p modulo the monic polynomial mod, in place.

    Returns a list of exactly deg(mod) coefficients.
    """
    cdef list m = list(mod)
    cdef Py_ssize_t d = len(m) - 1
    cdef Py_ssize_t i, j, base
    cdef object c, mj
    for i in range(len(p) - 1, d - 1, -1):
        c = p[i]
        if c:
            p[i] = 0
            base = i - d
            for j in range(d):
                mj = m[j]
                if mj:
                    p[base + j] = p[base + j] - c * mj
    del p[d:]
    if len(p) < d:
        p.extend([0] * (d - len(p)))
    return p


def poly_mulmod(list a, list b, mod):
    """Convolution followed by reduction modulo the monic polynomial mod."""
    return poly_reduce(poly_mul(a, b), mod)
