"""
Gaussian laws on the embedded plane
===================================

A law is a mean vector plus a positive semidefinite shape matrix A; its
characteristic function is exp(i <x, y> - <Ay, y>).  Narrow-sense laws
have A proportional to the identity, degenerate ones have A = 0.
"""

import numpy as np

from hypergauss import (
    make_gaussian,
    char_function,
    is_narrow_sense,
    is_degenerate,
    sample,
)

# A narrow-sense complex Gaussian: shape = identity.
narrow = make_gaussian([0, 0], np.eye(2))
print("narrow-sense:", is_narrow_sense(narrow))

# Skew the shape and it stays Gaussian but leaves the narrow-sense class.
wide = make_gaussian([0, 0], [[2, 1], [1, 1]])
print("wide-sense narrow?", is_narrow_sense(wide))

# Characteristic function values at a few points.
for y in ([0.0, 0.0], [1.0, 0.0], [0.5, -0.5]):
    print(f"phi({y}) = {char_function(wide, y):.6f}")

# A point mass is the degenerate case: |phi| = 1 everywhere.
point = make_gaussian([1, 2], np.zeros((2, 2)))
print("degenerate:", is_degenerate(point))
print("|phi([3, 7])| =", abs(char_function(point, [3.0, 7.0])))

# Sampling is seeded and reproducible; the covariance of the draws
# converges to 2A.
batch = sample(wide, n=200000, seed=7)
emp = np.cov(batch.rows.T)
print("\nempirical covariance:\n", emp.round(3))
print("2A:\n", 2 * wide.shape)
