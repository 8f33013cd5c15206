# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled solution-graph kernels. Same contract as ``_pykernels``.

All row data must fit comfortably in 64-bit integers; the caller checks that.
"""

from array import array
from libc.stdlib cimport malloc, free


cdef inline void _decode(long long idx, int n, long long base, long long* x) noexcept:
    cdef int j
    for j in range(n - 1, -1, -1):
        x[j] = idx % base
        idx = idx // base


def feasible_mask(coeffs, rhs, int n, long long d):
    cdef long long total = (d + 1) ** n
    cdef int m = len(rhs)
    cdef long long idx, k
    cdef int i, jj
    cdef unsigned char ok
    mask = bytearray(total)
    cdef unsigned char[:] mv = mask
    if m == 0:
        for k in range(total):
            mv[k] = 1
        return mask
    flat = array("q", [0]) * (m * n)
    for i in range(m):
        for j in range(n):
            flat[j * m + i] = coeffs[i][j]  # column-major
    cdef long long[:] col = flat
    b_arr = array("q", rhs)
    cdef long long[:] b = b_arr
    lhs_arr = array("q", [0]) * m
    cdef long long[:] lhs = lhs_arr
    x_arr = array("q", [0]) * n
    cdef long long[:] x = x_arr
    for idx in range(total):
        ok = 1
        for i in range(m):
            if lhs[i] < b[i]:
                ok = 0
                break
        mv[idx] = ok
        jj = n - 1
        while jj >= 0:
            if x[jj] < d:
                x[jj] += 1
                for i in range(m):
                    lhs[i] += col[jj * m + i]
                break
            for i in range(m):
                lhs[i] -= col[jj * m + i] * d
            x[jj] = 0
            jj -= 1
    return mask


def bfs_tree(mask, int n, long long d, long long src, long long target=-1):
    cdef const unsigned char[:] mv = mask
    cdef long long total = len(mask)
    dist_arr = array("q", [-1]) * total
    parent_arr = array("q", [-1]) * total
    cdef long long[:] dist = dist_arr
    cdef long long[:] parent = parent_arr
    queue_arr = array("q", [0]) * total
    cdef long long[:] queue = queue_arr
    cdef long long* w = <long long*> malloc(n * sizeof(long long))
    cdef long long* x = <long long*> malloc(n * sizeof(long long))
    cdef long long head = 0, tail = 0, u, du, base, y, v
    cdef int j
    try:
        w[n - 1] = 1
        for j in range(n - 2, -1, -1):
            w[j] = w[j + 1] * (d + 1)
        dist[src] = 0
        queue[tail] = src
        tail += 1
        while head < tail:
            u = queue[head]
            head += 1
            if u == target:
                break
            du = dist[u] + 1
            _decode(u, n, d + 1, x)
            for j in range(n):
                base = u - x[j] * w[j]
                for v in range(x[j]):
                    y = base + v * w[j]
                    if mv[y] and dist[y] < 0:
                        dist[y] = du
                        parent[y] = u
                        queue[tail] = y
                        tail += 1
            for j in range(n - 1, -1, -1):
                base = u - x[j] * w[j]
                for v in range(x[j] + 1, d + 1):
                    y = base + v * w[j]
                    if mv[y] and dist[y] < 0:
                        dist[y] = du
                        parent[y] = u
                        queue[tail] = y
                        tail += 1
    finally:
        free(w)
        free(x)
    return dist_arr, parent_arr


def component_labels(mask, int n, long long d):
    cdef const unsigned char[:] mv = mask
    cdef long long total = len(mask)
    label_arr = array("q", [-1]) * total
    cdef long long[:] label = label_arr
    stack_arr = array("q", [0]) * total
    cdef long long[:] stack = stack_arr
    cdef long long* w = <long long*> malloc(n * sizeof(long long))
    cdef long long* x = <long long*> malloc(n * sizeof(long long))
    cdef long long s, u, base, y, v, top
    cdef long long count = 0
    cdef int j
    try:
        w[n - 1] = 1
        for j in range(n - 2, -1, -1):
            w[j] = w[j + 1] * (d + 1)
        for s in range(total):
            if not mv[s] or label[s] >= 0:
                continue
            label[s] = count
            top = 0
            stack[top] = s
            top += 1
            while top > 0:
                top -= 1
                u = stack[top]
                _decode(u, n, d + 1, x)
                for j in range(n):
                    base = u - x[j] * w[j]
                    for v in range(d + 1):
                        y = base + v * w[j]
                        if mv[y] and label[y] < 0:
                            label[y] = count
                            stack[top] = y
                            top += 1
            count += 1
    finally:
        free(w)
        free(x)
    return label_arr, count


def degrees(mask, int n, long long d):
    cdef const unsigned char[:] mv = mask
    cdef long long total = len(mask)
    deg_arr = array("q", [0]) * total
    cdef long long[:] deg = deg_arr
    cdef long long* w = <long long*> malloc(n * sizeof(long long))
    cdef long long* x = <long long*> malloc(n * sizeof(long long))
    cdef long long u, base, v, c
    cdef int j
    try:
        w[n - 1] = 1
        for j in range(n - 2, -1, -1):
            w[j] = w[j + 1] * (d + 1)
        for u in range(total):
            if not mv[u]:
                continue
            _decode(u, n, d + 1, x)
            c = 0
            for j in range(n):
                base = u - x[j] * w[j]
                for v in range(d + 1):
                    if v != x[j] and mv[base + v * w[j]]:
                        c += 1
            deg[u] = c
    finally:
        free(w)
        free(x)
    return deg_arr


def eccentricity(mask, int n, long long d, long long src):
    dist, _ = bfs_tree(mask, n, d, src)
    return max(dist)
