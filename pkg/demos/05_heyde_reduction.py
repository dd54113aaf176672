"""
Conditional symmetry and its reduction to independence
======================================================

The second characterization asks when L2 = x1 + alpha*x2 can be
conditionally symmetric given L1 = x1 + x2.  Substituting the forms
shows this is the independence question in disguise, at the reduced
coefficient beta = (1 + alpha)^2 / (4 alpha).
"""

from hypergauss import (
    cplx,
    quat,
    heyde_reduction,
    heyde_to_sd_forms,
    classify_heyde,
    classify_skitovich_darmois,
    construct_heyde_counterexample,
    symmetry_residual,
    multiply,
    inverse,
    default_nonscalar_shape,
)

# The reduced coefficient and its invariants p (real part combination)
# and q (imaginary magnitude); the case letter records which regime the
# invariants fall in.
for alpha in (cplx(0, 1), cplx(2), cplx(-2), quat(0, 1, 1, 0)):
    red = heyde_reduction(alpha)
    print(f"alpha = {alpha}: beta = {red.beta}, p = {red.p:.6g}, "
          f"q = {red.q:.6g}, case {red.case}")

# Classification commutes with the reduction.
alpha = cplx(-2)
print("\nclassify_heyde(-2):", classify_heyde(alpha).outcome)
print("classify_sd(beta): ", classify_skitovich_darmois(heyde_reduction(alpha).beta).outcome)

# The substitution coefficients themselves: M1 has (1 + alpha, 2 alpha),
# M2 has (2, 1 + alpha).  Normalizing M2 against rescaled inputs leaves
# the coefficient pair (1, beta), which is how beta arises.
m1, m2 = heyde_to_sd_forms(alpha)
print("substituted forms: ({}, {}) and ({}, {})".format(
    *m1.coefficients, *m2.coefficients))
c1 = multiply(m2.coefficients[0], inverse(m1.coefficients[0]))
c2 = multiply(m2.coefficients[1], inverse(m1.coefficients[1]))
print("normalized second coefficient:", multiply(inverse(c1), c2))
print("beta from the reduction:      ", heyde_reduction(alpha).beta)

# alpha = -2 admits an exact counterexample: the two-sided symmetry
# identity holds to rounding with wide-sense inputs.
law1, law2 = construct_heyde_counterexample(-2, default_nonscalar_shape(2))
print("\nsymmetry residual at alpha = -2:", symmetry_residual(law1, law2, -2))

# alpha = -1 is excluded: the reduction degenerates (beta = 0).
print("classify_heyde(-1):", classify_heyde(-1).outcome)
