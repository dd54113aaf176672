"""Compiled inner loops for permutation statistics."""

import numba
import numpy as np


@numba.njit(fastmath=True, cache=True)
def permuted_products(A, B, perms):
    """sum_ij A[i, j] * B[p[i], p[j]] for each permutation row p.

    Fusing the gather with the product avoids materializing the
    permuted matrix, which dominates the cost in a numpy version.
    """
    m = perms.shape[0]
    n = A.shape[0]
    out = np.empty(m)
    for k in range(m):
        p = perms[k]
        acc = 0.0
        for i in range(n):
            row = A[i]
            permuted = B[p[i]]
            s = 0.0
            for j in range(n):
                s += row[j] * permuted[p[j]]
            acc += s
        out[k] = acc
    return out
