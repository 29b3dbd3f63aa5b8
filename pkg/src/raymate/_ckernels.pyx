# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=False
"""Compiled kernels; contracts mirror ``raymate._pykernels``.

All integer arithmetic is int64. The Python selector only dispatches here
when ``d**(r+1) * ref_den`` fits comfortably in 62 bits.
"""

import numpy as np
cimport numpy as cnp

ctypedef long long i64

STAR = -1


def itinerary_codes(nums, int r, int d, i64 ref_num, i64 ref_den):
    cdef i64 m = 1
    cdef int k
    for k in range(r):
        m *= d
    m -= 1
    cdef i64 den = m * ref_den
    cdef i64 shift = ref_num * m
    cdef cnp.int64_t[:] a = np.asarray(nums, dtype=np.int64)
    cdef Py_ssize_t n = a.shape[0]
    out = np.empty((n, r), dtype=np.int8)
    cdef cnp.int8_t[:, :] o = out
    cdef Py_ssize_t i
    cdef i64 x, num, q
    for i in range(n):
        x = a[i]
        for k in range(r):
            num = d * x * ref_den - shift
            if num % den == 0:
                o[i, k] = -1
            else:
                q = num // den
                o[i, k] = (q + 1) % d
            x = (x * d) % m
    return out


def star_matches(codes_lo, codes_hi, rows):
    cdef cnp.int8_t[:, :] lo = np.ascontiguousarray(codes_lo, dtype=np.int8)
    cdef cnp.int8_t[:, :] hi = np.ascontiguousarray(codes_hi, dtype=np.int8)
    cdef Py_ssize_t n = lo.shape[0]
    cdef Py_ssize_t r = lo.shape[1]
    cdef Py_ssize_t i, j, k
    cdef cnp.int8_t p, s
    cdef bint ok
    out = []
    for i in rows:
        for j in range(n):
            if j == i:
                continue
            ok = True
            for k in range(r):
                p = lo[i, k]
                s = lo[j, k]
                if p != s and p != -1 and s != -1:
                    ok = False
                    break
                p = hi[i, k]
                s = hi[j, k]
                if p != s and p != -1 and s != -1:
                    ok = False
                    break
            if ok:
                out.append((i, j))
    return out


cdef Py_ssize_t _find(cnp.int64_t[:] parent, Py_ssize_t x):
    while parent[x] != x:
        parent[x] = parent[parent[x]]
        x = parent[x]
    return x


def components(Py_ssize_t n_nodes, us, vs):
    cdef cnp.int64_t[:] u = np.asarray(us, dtype=np.int64)
    cdef cnp.int64_t[:] v = np.asarray(vs, dtype=np.int64)
    parent_arr = np.arange(n_nodes, dtype=np.int64)
    cdef cnp.int64_t[:] parent = parent_arr
    cdef Py_ssize_t e, ru, rv, x
    for e in range(u.shape[0]):
        ru = _find(parent, u[e])
        rv = _find(parent, v[e])
        if ru != rv:
            parent[ru] = rv
    relabel_arr = np.full(n_nodes, -1, dtype=np.int64)
    cdef cnp.int64_t[:] relabel = relabel_arr
    labels_arr = np.empty(n_nodes, dtype=np.int64)
    cdef cnp.int64_t[:] labels = labels_arr
    cdef Py_ssize_t count = 0
    for x in range(n_nodes):
        ru = _find(parent, x)
        if relabel[ru] < 0:
            relabel[ru] = count
            count += 1
        labels[x] = relabel[ru]
    nodes_arr = np.zeros(count, dtype=np.int64)
    edges_arr = np.zeros(count, dtype=np.int64)
    cdef cnp.int64_t[:] nc = nodes_arr
    cdef cnp.int64_t[:] ec = edges_arr
    for x in range(n_nodes):
        nc[labels[x]] += 1
    for e in range(u.shape[0]):
        ec[labels[u[e]]] += 1
    return labels_arr.tolist(), nodes_arr.tolist(), edges_arr.tolist()
