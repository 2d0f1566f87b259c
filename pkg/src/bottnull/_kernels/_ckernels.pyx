# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled kernels: packed-key multiset convolution and batched chamber walks.

Weights are packed 9 bits per coordinate (bias 256), so any coordinate in
[-255, 255] round-trips and ranks up to 7 fit one int64.  Callers guarantee
the ranges (the dispatcher falls back to the pure kernels otherwise).
"""

from libc.stdint cimport int64_t

BACKEND = "compiled"

DEF SHIFT = 9
DEF BIAS = 256
DEF MASK = (1 << SHIFT) - 1


cdef inline int64_t _pack(tuple w) except? -1:
    cdef int64_t acc = 0
    cdef Py_ssize_t i
    for i in range(len(w)):
        acc = (acc << SHIFT) | ((<int64_t> w[i]) + BIAS)
    return acc


cdef inline tuple _unpack(int64_t key, Py_ssize_t rank):
    cdef Py_ssize_t i
    out = []
    for i in range(rank - 1, -1, -1):
        out.append(<int>(((key >> (SHIFT * i)) & MASK) - BIAS))
    return tuple(out)


def convolve(dict a, dict b):
    """Minkowski convolution; identical output to the pure kernel."""
    cdef Py_ssize_t rank = 0
    for w in a:
        rank = len(<tuple> w)
        break
    else:
        return {}
    if not b:
        return {}
    # Packed zero-vector: summing two biased keys double-counts the bias.
    cdef int64_t zero = _pack((0,) * rank)
    cdef dict acc = {}
    cdef list ka = [], ca = [], kb = [], cb = []
    for w, c in a.items():
        ka.append(_pack(<tuple> w)); ca.append(c)
    for w, c in b.items():
        kb.append(_pack(<tuple> w)); cb.append(c)
    cdef Py_ssize_t i, j, na = len(ka), nb = len(kb)
    cdef int64_t key_a, cnt_a, key
    for i in range(na):
        key_a = <int64_t> ka[i]
        cnt_a = <int64_t> ca[i]
        for j in range(nb):
            key = key_a + (<int64_t> kb[j]) - zero
            val = acc.get(key)
            if val is None:
                acc[key] = cnt_a * (<int64_t> cb[j])
            else:
                acc[key] = val + cnt_a * (<int64_t> cb[j])
    cdef dict out = {}
    for k, v in acc.items():
        out[_unpack(<int64_t> k, rank)] = v
    return out


def dot_walk_batch(list weights, tuple cartan):
    """Batched rho-shifted dominantization; identical output to the pure kernel."""
    cdef Py_ssize_t rank = len(cartan)
    cdef int64_t[7][7] cols
    cdef Py_ssize_t i, j
    for j in range(rank):
        for i in range(rank):
            cols[j][i] = <int64_t> cartan[i][j]
    cdef int64_t[7] mu
    cdef int64_t c
    cdef Py_ssize_t length
    cdef bint singular
    out = []
    for w in weights:
        for i in range(rank):
            mu[i] = (<int64_t> (<tuple> w)[i]) + 1
        length = 0
        while True:
            for i in range(rank):
                c = mu[i]
                if c < 0:
                    for j in range(rank):
                        mu[j] -= c * cols[i][j]
                    length += 1
                    break
            else:
                break
        singular = False
        for i in range(rank):
            if mu[i] == 0:
                singular = True
                break
        if singular:
            out.append(None)
        else:
            dom = []
            for i in range(rank):
                dom.append(<int>(mu[i] - 1))
            out.append((length, tuple(dom)))
    return out
