# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled BFS expansion kernel.

Contract and iteration order are identical to the pure-Python kernel in
pure.py; see that module for the semantics. Cell count is limited to 256
per state (the dispatcher falls back to the pure kernel beyond that).
"""

from cpython.bytes cimport PyBytes_FromStringAndSize

KERNEL_NAME = "compiled"

DEF MAX_CELLS = 256


def expand_level(list frontier, dict visited, const unsigned char[::1] eu,
                 const unsigned char[::1] ev, const unsigned char[::1] adj,
                 int ntok):
    cdef list nxt = []
    cdef Py_ssize_t m = eu.shape[0]
    cdef Py_ssize_t n, i, k
    cdef unsigned char buf[MAX_CELLS]
    cdef unsigned char a, b, u, v
    cdef const unsigned char[::1] sview
    cdef bytes child
    for s in frontier:
        sview = s
        n = sview.shape[0]
        for i in range(n):
            buf[i] = sview[i]
        for k in range(m):
            u = eu[k]
            v = ev[k]
            a = buf[u]
            b = buf[v]
            if a == b or adj[a * ntok + b] == 0:
                continue
            buf[u] = b
            buf[v] = a
            child = PyBytes_FromStringAndSize(<const char*>buf, n)
            buf[u] = a
            buf[v] = b
            if child not in visited:
                visited[child] = (s, k)
                nxt.append(child)
    return nxt


def expand_level_set(list frontier, set visited, const unsigned char[::1] eu,
                     const unsigned char[::1] ev, const unsigned char[::1] adj,
                     int ntok):
    cdef list nxt = []
    cdef Py_ssize_t m = eu.shape[0]
    cdef Py_ssize_t n, i, k
    cdef unsigned char buf[MAX_CELLS]
    cdef unsigned char a, b, u, v
    cdef const unsigned char[::1] sview
    cdef bytes child
    for s in frontier:
        sview = s
        n = sview.shape[0]
        for i in range(n):
            buf[i] = sview[i]
        for k in range(m):
            u = eu[k]
            v = ev[k]
            a = buf[u]
            b = buf[v]
            if a == b or adj[a * ntok + b] == 0:
                continue
            buf[u] = b
            buf[v] = a
            child = PyBytes_FromStringAndSize(<const char*>buf, n)
            buf[u] = a
            buf[v] = b
            if child not in visited:
                visited.add(child)
                nxt.append(child)
    return nxt
