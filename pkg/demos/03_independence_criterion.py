"""
When are two linear forms of Gaussian inputs independent?
=========================================================

Given independent Gaussian inputs xi_j and forms L1 = sum a_j xi_j,
L2 = sum b_j xi_j, independence is equivalent to a single matrix
vanishing: sum_j embed(conj(a_j)).T @ A_j @ embed(conj(b_j)) = 0.

Two routes confirm each other here: the criterion matrix, and a direct
characteristic-function identity check over a grid.
"""

import numpy as np

from hypergauss import (
    cplx,
    make_gaussian,
    gaussian_independence_criterion,
    independence_residual,
    construct_proposition1,
)

# Identity shapes with coefficients (1, 1) and (1, alpha): dependent
# unless the criterion matrix happens to cancel.
laws = [make_gaussian([0, 0], np.eye(2)), make_gaussian([0, 0], np.eye(2))]
m = gaussian_independence_criterion(laws, [1, 1], [1, cplx(2)])
print("criterion matrix (identity shapes, alpha = 2):\n", m)
print("residual:", independence_residual(laws, [1, 1], [1, cplx(2)]))

# Now scale the first shape so the two terms cancel: A1 = 2*A2 with
# beta = (1, -2) makes the sum vanish exactly.
laws = [make_gaussian([0, 0], 2 * np.eye(2)), make_gaussian([0, 0], np.eye(2))]
m = gaussian_independence_criterion(laws, [1, 1], [1, cplx(-2)])
print("\ncriterion matrix (cancelling pair):\n", m)
print("residual:", independence_residual(laws, [1, 1], [1, cplx(-2)]))

# construct_proposition1 builds whole families like this from weights:
# shapes sigma_j * A with sum sigma_j embed(conj(beta_j)) = 0.
family = construct_proposition1([1, 1, 2], [cplx(1), cplx(1), cplx(-1)], [[2, 1], [1, 1]])
resid = independence_residual(family, [1, 1, 1], [cplx(1), cplx(1), cplx(-1)])
print("\nthree-term family residual:", resid)
for k, law in enumerate(family):
    print(f"  law {k} shape:\n{law.shape}")
