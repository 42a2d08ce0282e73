# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled series kernels.

Object-mode loops: coefficients stay arbitrary Python ring elements (bignum
int or CycInt), so results are bit-identical to `_kernels_py`; the win is
stripping interpreter dispatch from the inner loops.
"""


def conv_truncated(list a, list b, Py_ssize_t nmax, zero):
    """Truncated product: out[n] = sum_{i+j=n} a[i]*b[j] for n <= nmax."""
    cdef Py_ssize_t la = len(a), lb = len(b)
    cdef Py_ssize_t i, j, hi
    cdef list out = [zero] * (nmax + 1)
    for i in range(la):
        if i > nmax:
            break
        ai = a[i]
        if not ai:
            continue
        hi = nmax - i
        if hi > lb - 1:
            hi = lb - 1
        for j in range(hi + 1):
            bj = b[j]
            if bj:
                out[i + j] = out[i + j] + ai * bj
    return out


def mul_one_minus_uqk(list c, u, Py_ssize_t k):
    """In place, multiply the coefficient list by (1 - u*q^k)."""
    cdef Py_ssize_t n = len(c) - 1, t
    if k < 1:
        raise ValueError("factor exponent must be >= 1")
    if k > n:
        return
    if u == 1:
        for t in range(n, k - 1, -1):
            s = c[t - k]
            if s:
                c[t] = c[t] - s
    else:
        for t in range(n, k - 1, -1):
            s = c[t - k]
            if s:
                c[t] = c[t] - u * s


def div_one_minus_uqk(list c, u, Py_ssize_t k):
    """In place, divide the coefficient list by (1 - u*q^k)."""
    cdef Py_ssize_t n = len(c) - 1, t
    if k < 1:
        raise ValueError("factor exponent must be >= 1")
    if k > n:
        return
    if u == 1:
        for t in range(k, n + 1):
            s = c[t - k]
            if s:
                c[t] = c[t] + s
    else:
        for t in range(k, n + 1):
            s = c[t - k]
            if s:
                c[t] = c[t] + u * s


def add_scaled_shifted(list acc, list src, Py_ssize_t shift, scale):
    """In place: acc[shift+i] += scale * src[i], truncating past len(acc)."""
    cdef Py_ssize_t n = len(acc) - 1, ls = len(src)
    cdef Py_ssize_t hi = n - shift, i
    if hi > ls - 1:
        hi = ls - 1
    if scale == 1:
        for i in range(hi + 1):
            s = src[i]
            if s:
                acc[shift + i] = acc[shift + i] + s
    else:
        for i in range(hi + 1):
            s = src[i]
            if s:
                acc[shift + i] = acc[shift + i] + scale * s
