"""Gaussian characterization theorems over complex and quaternion scalars.

The package decides, for linear forms of independent hypercomplex
Gaussian variables, when independence or conditional symmetry of the
forms forces the variables to be narrow-sense (real-type) Gaussian, and
when wide-sense counterexamples exist.  It provides exact matrix
criteria, explicit counterexample constructions, and Monte Carlo tests
that check the constructions from samples alone.
"""

from .algebra import (
    COMPLEX,
    QUATERNION,
    REAL_TOL,
    HypercomplexScalar,
    as_scalar,
    conjugate,
    cplx,
    embed,
    format_scalar,
    inverse,
    is_real,
    is_zero,
    multiply,
    norm_squared,
    quat,
    real_scalar,
    scalar_from_dict,
    scalar_from_embedding,
)
from .characterize import (
    COUNTEREXAMPLE_EXISTS,
    CRITERION_TOL,
    DEGENERATE_FORCED,
    EXCLUDED,
    NEGATIVE_SCALING_FAMILY,
    ONLY_ZERO,
    RESIDUAL_TOL,
    ConstraintSolution,
    HeydeReduction,
    LinearFormSpec,
    Verdict,
    as_form,
    classify_heyde,
    classify_skitovich_darmois,
    construct_heyde_counterexample,
    construct_proposition1,
    construct_sd_counterexample,
    default_grid,
    default_nonscalar_shape,
    gaussian_independence_criterion,
    heyde_reduction,
    heyde_to_sd_forms,
    independence_residual,
    solve_psd_constraint,
    symmetry_residual,
)
from .gaussian import (
    GaussianLaw,
    SampleBatch,
    char_function,
    is_degenerate,
    is_narrow_sense,
    law_from_dict,
    law_to_dict,
    make_gaussian,
    sample,
)
from .montecarlo import (
    CONSISTENT_WITH_NULL,
    REJECT_NULL,
    FormSamplePair,
    TestResult,
    conditional_symmetry_test,
    cross_covariance_test,
    distance_covariance_test,
    sample_forms,
    sample_linear_forms,
)

__version__ = "0.1.0"
