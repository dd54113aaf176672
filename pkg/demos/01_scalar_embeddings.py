"""
Hypercomplex scalars and their real matrix embeddings
=====================================================

Complex numbers become 2x2 real matrices, quaternions 4x4, and the
embedding turns multiplication into matrix products.
"""

import numpy as np

from hypergauss import cplx, quat, embed, multiply, conjugate, inverse, norm_squared

# A complex scalar is a pair of real components.
z = cplx(1, 2)
print("z =", z)
print("embed(z) =\n", embed(z))

# The embedding is a ring homomorphism: products map to matrix products.
w = cplx(3, -1)
lhs = embed(multiply(z, w))
rhs = embed(z) @ embed(w)
print("embed(z*w) == embed(z) @ embed(w):", np.array_equal(lhs, rhs))

# Conjugation corresponds to matrix transposition.
print("embed(conj(z)) == embed(z).T:", np.array_equal(embed(conjugate(z)), embed(z).T))

# Quaternions follow the same pattern with the Hamilton product.
q = quat(1, 1, 1, 1)
print("\nq =", q)
print("embed(q) determinant =", np.linalg.det(embed(q)))
print("|q|^4 =", norm_squared(q) ** 2)

# i * j = k, and the embedding agrees.
i, j = quat(0, 1, 0, 0), quat(0, 0, 1, 0)
print("i * j =", multiply(i, j))

# Inverses exist for every nonzero scalar.
q_inv = inverse(q)
print("q * q^-1 =", multiply(q, q_inv))
