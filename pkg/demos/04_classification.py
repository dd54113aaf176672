"""
Classifying the coefficient plane
=================================

For forms L1 = x1 + x2 and L2 = x1 + alpha*x2, which alpha admit
independent L1, L2 with non-degenerate wide-sense Gaussian inputs?
The answer depends only on where alpha sits: off the real axis or on
its positive half, independence forces degenerate inputs; on the
negative real axis a one-parameter family of counterexamples appears.
"""

from hypergauss import (
    cplx,
    quat,
    classify_skitovich_darmois,
    solve_psd_constraint,
    construct_sd_counterexample,
    independence_residual,
    is_narrow_sense,
    default_nonscalar_shape,
)

probes = [cplx(0, 1), cplx(1, 1), cplx(2), cplx(-0.5), cplx(-2), quat(-2), quat(0, 1, 1, 0)]
for alpha in probes:
    verdict = classify_skitovich_darmois(alpha)
    print(f"alpha = {alpha}: {verdict.outcome}")
    print(f"    {verdict.rationale}")

# The PSD constraint solver explains the split: it looks for nonzero
# PSD shapes B with -B @ embed(conj(alpha)) symmetric PSD.
print("\nsolver outcomes:")
for alpha in (cplx(0, 1), cplx(3), cplx(-0.5)):
    sol = solve_psd_constraint(alpha)
    print(f"  alpha = {alpha}: {sol.kind}", f"(scaling {sol.scaling})" if sol.scaling else "")

# On the negative axis the constructed pair is exact: the residual of
# the factorization identity is zero to rounding, yet neither input is
# narrow-sense.
B = default_nonscalar_shape(2)
law1, law2 = construct_sd_counterexample(-2, B)
print("\nalpha = -2 construction:")
print("  shapes A1 = 2*B, A2 = B with B =", B.tolist())
print("  residual:", independence_residual([law1, law2], [1, 1], [1, -2]))
print("  narrow-sense inputs:", is_narrow_sense(law1), is_narrow_sense(law2))
