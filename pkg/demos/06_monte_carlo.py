"""
Monte Carlo checks of the constructed laws
==========================================

Beyond exact characteristic-function residuals, the constructions can
be stress-tested on finite samples: cross covariances, distance
covariance with permutation calibration, and a paired sign-flip test
for conditional symmetry.
"""

from hypergauss import (
    construct_sd_counterexample,
    construct_heyde_counterexample,
    default_nonscalar_shape,
    make_gaussian,
    sample_forms,
    cross_covariance_test,
    distance_covariance_test,
    conditional_symmetry_test,
)

B = default_nonscalar_shape(2)

# Independence construction at alpha = -2: both tests should be
# consistent with the null.
law1, law2 = construct_sd_counterexample(-2, B)
pair = sample_forms(law1, law2, [1, 1], [1, -2], n=200000, seed=0)
res = cross_covariance_test(pair)
print(f"cross covariance: statistic {res.statistic:.3f}, verdict {res.verdict}")

pair_small = sample_forms(law1, law2, [1, 1], [1, -2], n=2000, seed=0)
res = distance_covariance_test(pair_small, permutations=199, seed=0)
print(f"distance covariance: p = {res.p_value:.3f}, verdict {res.verdict}")

# Break the construction on purpose: identity shapes with the same
# coefficients are dependent, and both tests see it.
dep1 = make_gaussian([0, 0], [[1, 0], [0, 1]])
dep2 = make_gaussian([0, 0], [[1, 0], [0, 1]])
pair_dep = sample_forms(dep1, dep2, [1, 1], [1, -2], n=2000, seed=0)
res = distance_covariance_test(pair_dep, permutations=199, seed=0)
print(f"dependent control: p = {res.p_value:.3f}, verdict {res.verdict}")

# Conditional symmetry at alpha = -2, checked by flipping the sign of
# L2 within each draw: exchangeable under the null.
h1, h2 = construct_heyde_counterexample(-2, B)
pair_sym = sample_forms(h1, h2, [1, 1], [1, -2], n=1000, seed=0)
res = conditional_symmetry_test(pair_sym, permutations=199, seed=0)
print(f"conditional symmetry: p = {res.p_value:.3f}, verdict {res.verdict}")

# A mean shift destroys the symmetry.
shifted = make_gaussian([2.0, 0.0], h2.shape)
pair_shift = sample_forms(h1, shifted, [1, 1], [1, -2], n=1000, seed=0)
res = conditional_symmetry_test(pair_shift, permutations=199, seed=0)
print(f"mean-shifted control: p = {res.p_value:.3f}, verdict {res.verdict}")
