# cython: boundscheck=False, wraparound=False, initializedcheck=False, cdivision=True
"""Compiled CSR matrix-vector kernels.

Row entries are accumulated left to right, matching the numpy fallback, so
both backends produce the same summation order.
"""


def csr_matvec_real(const long long[::1] indptr, const long long[::1] indices,
                    const double[::1] data, const double[::1] x,
                    double[::1] out):
    cdef Py_ssize_t n = indptr.shape[0] - 1
    cdef Py_ssize_t r
    cdef long long k
    cdef double acc
    with nogil:
        for r in range(n):
            acc = 0.0
            for k in range(indptr[r], indptr[r + 1]):
                acc += data[k] * x[indices[k]]
            out[r] = acc


def csr_matvec_complex(const long long[::1] indptr, const long long[::1] indices,
                       const double complex[::1] data, const double complex[::1] x,
                       double complex[::1] out):
    cdef Py_ssize_t n = indptr.shape[0] - 1
    cdef Py_ssize_t r
    cdef long long k
    cdef double complex acc
    with nogil:
        for r in range(n):
            acc = 0.0
            for k in range(indptr[r], indptr[r + 1]):
                acc = acc + data[k] * x[indices[k]]
            out[r] = acc
