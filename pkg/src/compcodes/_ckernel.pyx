# cython: boundscheck=False, wraparound=False
"""Compiled kernel: canonical readout signatures.

Byte-for-byte identical output to compcodes._pykernel; see that module for
the layout description.
"""

from libc.stdlib cimport free, malloc

BACKEND = "cython"

MAX_N = 255


def full_signature(bits: bytes) -> bytes:
    cdef const unsigned char[:] view = bits
    cdef Py_ssize_t n = view.shape[0]
    if n < 1 or n > 255:
        raise ValueError(f"length must be in [1, 255], got {n}")

    cdef Py_ssize_t out_len = n * (n + 3) // 2
    cdef int *pref = <int *> malloc((n + 1) * sizeof(int))
    cdef unsigned char *out = <unsigned char *> malloc(out_len)
    if pref == NULL or out == NULL:
        free(pref)
        free(out)
        raise MemoryError()

    cdef Py_ssize_t i, j, k, base
    cdef unsigned char b
    try:
        pref[0] = 0
        for i in range(n):
            b = view[i]
            if b > 1:
                raise ValueError("bits must contain only 0 and 1 byte values")
            pref[i + 1] = pref[i] + b
        for i in range(out_len):
            out[i] = 0
        base = 0
        for k in range(1, n + 1):
            for j in range(n - k + 1):
                out[base + pref[j + k] - pref[j]] += 1
            base += k + 1
        return out[:out_len]
    finally:
        free(pref)
        free(out)
