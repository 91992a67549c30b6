# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled O(n^2) concordance kernel for the exact Kendall tau statistic."""


def concordance_diff(double[::1] x, double[::1] y):
    """Return (#concordant - #discordant) over all i<j pairs; ties count 0."""
    cdef Py_ssize_t i, j, n = x.shape[0]
    cdef long long total = 0
    cdef double p
    for i in range(n - 1):
        for j in range(i + 1, n):
            p = (x[j] - x[i]) * (y[j] - y[i])
            if p > 0:
                total += 1
            elif p < 0:
                total -= 1
    return total
