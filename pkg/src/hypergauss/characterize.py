"""Characterization criteria for hypercomplex Gaussian laws.

Two classical facts about real random variables say that independence
(Skitovich-Darmois) or conditional symmetry (Heyde) of linear forms of
independent variables forces the variables to be Gaussian.  Over
complex and quaternion scalars the wide-sense analogues fail for some
coefficient values: this module classifies coefficients, solves the
matrix constraint that decides the question, and constructs explicit
counterexample laws when they exist.

Linear forms L1 = sum_j alpha_j xi_j and L2 = sum_j beta_j xi_j with
hypercomplex coefficients act on real vectors through the conjugate
embedding matrices.  For Gaussian xi_j with shape matrices A_j, L1 and
L2 are independent iff the criterion matrix

    M = sum_j embed(conj(alpha_j)).T @ A_j @ embed(conj(beta_j))

vanishes; the characteristic-function identity picks up a factor
exp(-2 u.T M v) otherwise.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .algebra import (
    COMPLEX,
    QUATERNION,
    REAL_TOL,
    HypercomplexScalar,
    as_scalar,
    conjugate,
    embed,
    inverse,
    is_real,
    is_zero,
    multiply,
    norm_squared,
    real_scalar,
)
from .gaussian import (
    NARROW_SENSE_TOL,
    GaussianLaw,
    char_function,
    is_narrow_sense,
    make_gaussian,
)

# Verdict outcomes.
DEGENERATE_FORCED = "DegenerateForced"
COUNTEREXAMPLE_EXISTS = "CounterexampleExists"
EXCLUDED = "Excluded"

# Constraint solution kinds.
ONLY_ZERO = "OnlyZero"
NEGATIVE_SCALING_FAMILY = "NegativeScalingFamily"

# A criterion matrix below this Frobenius norm counts as vanishing, and
# a characteristic-function residual below RESIDUAL_TOL counts as an
# exact identity.
CRITERION_TOL = 1e-10
RESIDUAL_TOL = 1e-12


@dataclass(frozen=True)
class LinearFormSpec:
    """Coefficients of one linear form; same kind, no zero entries."""

    coefficients: tuple[HypercomplexScalar, ...]

    def __post_init__(self):
        coeffs = tuple(self.coefficients)
        if len(coeffs) < 2:
            raise ValueError("a linear form needs at least two coefficients")
        kinds = {c.kind for c in coeffs}
        if len(kinds) != 1:
            raise ValueError(f"mixed coefficient kinds: {sorted(kinds)}")
        for j, c in enumerate(coeffs):
            if is_zero(c):
                raise ValueError(f"coefficient {j} is zero")
        object.__setattr__(self, "coefficients", coeffs)

    @property
    def kind(self) -> str:
        return self.coefficients[0].kind

    @property
    def dim(self) -> int:
        return self.coefficients[0].dim

    def __len__(self):
        return len(self.coefficients)

    def __iter__(self):
        return iter(self.coefficients)


@dataclass(frozen=True)
class Verdict:
    outcome: str
    rationale: str


@dataclass(frozen=True)
class ConstraintSolution:
    """Solution set of A + B M(conj(alpha)) = 0 over PSD pairs (A, B)."""

    kind: str
    scaling: float | None = None


@dataclass(frozen=True)
class HeydeReduction:
    """beta = (1+alpha)^2 / (4 alpha) with its real part p, imaginary
    magnitude q, and case label A/B/C."""

    beta: HypercomplexScalar
    p: float
    q: float
    case: str


def as_form(coefficients, kind: str | None = None) -> LinearFormSpec:
    """Coerce a LinearFormSpec or a sequence of scalars/numbers."""
    if isinstance(coefficients, LinearFormSpec):
        if kind is not None and coefficients.kind != kind:
            raise ValueError(f"expected {kind} coefficients, got {coefficients.kind}")
        return coefficients
    return LinearFormSpec(tuple(as_scalar(c, kind) for c in coefficients))


def _kind_for_dim(dim: int) -> str:
    if dim == 2:
        return COMPLEX
    if dim == 4:
        return QUATERNION
    raise ValueError(f"dimension must be 2 or 4, got {dim}")


def default_nonscalar_shape(dim: int) -> np.ndarray:
    """Preset nonscalar PSD shape matrix used by counterexample builders."""
    if dim == 2:
        return np.array([[2.0, 1.0], [1.0, 1.0]])
    if dim == 4:
        return np.diag([2.0, 1.0, 1.0, 1.0])
    raise ValueError(f"dimension must be 2 or 4, got {dim}")


def default_grid(dim: int, points: int = 500, seed: int = 0):
    """Evaluation pairs (U, V) for residual checks.

    dim 2 uses the Cartesian square of the integer grid {-2..2}^2 (625
    pairs), which exercises sign cancellations that random points can
    miss.  dim 4 draws `points` standard-normal pairs from a fixed seed.
    """
    if dim == 2:
        axis = np.array([-2.0, -1.0, 0.0, 1.0, 2.0])
        pts = np.array([(x, y) for x in axis for y in axis])
        u = np.repeat(pts, len(pts), axis=0)
        v = np.tile(pts, (len(pts), 1))
        return u, v
    if dim == 4:
        from .gaussian import _generator, _standard_normals

        rng = _generator(seed)
        u = _standard_normals(rng, points * 4).reshape(points, 4)
        v = _standard_normals(rng, points * 4).reshape(points, 4)
        return u, v
    raise ValueError(f"dimension must be 2 or 4, got {dim}")


def _resolve_grid(grid, dim: int):
    if grid is None:
        return default_grid(dim)
    u, v = grid
    u = np.atleast_2d(np.asarray(u, dtype=float))
    v = np.atleast_2d(np.asarray(v, dtype=float))
    if u.shape != v.shape or u.shape[1] != dim:
        raise ValueError(f"grid arrays must both have shape (m, {dim})")
    return u, v


def _char(law):
    if isinstance(law, GaussianLaw):
        return lambda ys: char_function(law, ys)
    if callable(law):
        return law
    raise TypeError(f"law must be a GaussianLaw or a callable, got {type(law)!r}")


def _infer_kind(laws, *forms) -> str | None:
    for law in laws:
        if isinstance(law, GaussianLaw):
            return _kind_for_dim(law.dim)
    for form in forms:
        if isinstance(form, LinearFormSpec):
            return form.kind
        for c in form:
            if isinstance(c, HypercomplexScalar):
                return c.kind
    return None


def _check_law_dims(laws, dim: int):
    for j, law in enumerate(laws):
        if isinstance(law, GaussianLaw) and law.dim != dim:
            raise ValueError(f"law {j} has dim {law.dim}, coefficients act on dim {dim}")


def independence_residual(laws, alphas, betas, grid=None) -> float:
    """Max deviation from the factorization identity for independent forms.

    Evaluates | prod_j phi_j(conj(a_j) u + conj(b_j) v)
                - prod_j phi_j(conj(a_j) u) prod_j phi_j(conj(b_j) v) |
    over the grid and returns the maximum.  Zero (to rounding) iff the
    two forms are independent.
    """
    kind = _infer_kind(laws, alphas, betas)
    alphas = as_form(alphas, kind)
    betas = as_form(betas, alphas.kind)
    if len(laws) != len(alphas) or len(alphas) != len(betas):
        raise ValueError("laws, alphas and betas must have equal length")
    dim = alphas.dim
    _check_law_dims(laws, dim)
    u, v = _resolve_grid(grid, dim)
    m = u.shape[0]
    lhs = np.ones(m, dtype=complex)
    rhs_u = np.ones(m, dtype=complex)
    rhs_v = np.ones(m, dtype=complex)
    for law, a, b in zip(laws, alphas, betas):
        phi = _char(law)
        ma = embed(conjugate(a))
        mb = embed(conjugate(b))
        lhs *= phi(u @ ma.T + v @ mb.T)
        rhs_u *= phi(u @ ma.T)
        rhs_v *= phi(v @ mb.T)
    return float(np.abs(lhs - rhs_u * rhs_v).max())


def symmetry_residual(law1, law2, alpha, grid=None) -> float:
    """Max deviation from the conditional-symmetry identity.

    For L1 = xi1 + xi2 and L2 = xi1 + alpha xi2, the conditional
    distribution of L2 given L1 is symmetric iff

        phi1(u + v) phi2(u + conj(alpha) v)
          = phi1(u - v) phi2(u - conj(alpha) v)

    for all u, v; the maximum absolute difference over the grid is
    returned.
    """
    kind = _infer_kind([law1, law2])
    s = as_scalar(alpha, kind)
    dim = s.dim
    _check_law_dims([law1, law2], dim)
    u, v = _resolve_grid(grid, dim)
    phi1 = _char(law1)
    phi2 = _char(law2)
    ma = embed(conjugate(s))
    va = v @ ma.T
    lhs = phi1(u + v) * phi2(u + va)
    rhs = phi1(u - v) * phi2(u - va)
    return float(np.abs(lhs - rhs).max())


def gaussian_independence_criterion(laws, alphas, betas) -> np.ndarray:
    """Criterion matrix sum_j embed(conj(a_j)).T @ A_j @ embed(conj(b_j)).

    The forms are independent iff this matrix vanishes.  Requires
    GaussianLaw inputs (their shape matrices enter directly).
    """
    kind = _infer_kind(laws, alphas, betas)
    alphas = as_form(alphas, kind)
    betas = as_form(betas, alphas.kind)
    if len(laws) != len(alphas) or len(alphas) != len(betas):
        raise ValueError("laws, alphas and betas must have equal length")
    dim = alphas.dim
    out = np.zeros((dim, dim))
    for j, (law, a, b) in enumerate(zip(laws, alphas, betas)):
        if not isinstance(law, GaussianLaw):
            raise TypeError(f"law {j} must be a GaussianLaw")
        if law.dim != dim:
            raise ValueError(f"law {j} has dim {law.dim}, coefficients act on dim {dim}")
        out += embed(conjugate(a)).T @ law.shape @ embed(conjugate(b))
    return out


def solve_psd_constraint(alpha) -> ConstraintSolution:
    """Solve A + B M(conj(alpha)) = 0 over symmetric PSD pairs (A, B).

    For alpha with a nonzero imaginary component, symmetry of A forces
    tr(B) scaled by each imaginary component to vanish, so B = 0 (and
    then A = 0).  For real alpha = a > 0, A = -aB is PSD only at zero.
    For real a < 0 every PSD B gives the PSD solution A = (-a) B.
    """
    s = as_scalar(alpha)
    if is_zero(s, REAL_TOL):
        raise ValueError("alpha must be nonzero")
    if not is_real(s):
        return ConstraintSolution(kind=ONLY_ZERO)
    if s.a > 0:
        return ConstraintSolution(kind=ONLY_ZERO)
    return ConstraintSolution(kind=NEGATIVE_SCALING_FAMILY, scaling=-s.a)


def classify_skitovich_darmois(alpha) -> Verdict:
    """Independence setting: can non-narrow-sense laws keep L1, L2 independent?

    Coefficient reduction puts the forms in the shape (1, 1), (1, alpha),
    so a single scalar decides the answer.
    """
    s = as_scalar(alpha)
    if is_zero(s, REAL_TOL):
        raise ValueError("alpha must be nonzero")
    if not is_real(s):
        return Verdict(
            outcome=DEGENERATE_FORCED,
            rationale="imag(alpha) != 0: the PSD constraint A + B M(conj(alpha)) = 0 "
            "has only the zero solution, so both laws are degenerate",
        )
    if s.a > 0:
        return Verdict(
            outcome=DEGENERATE_FORCED,
            rationale="alpha real, a > 0: A = -a B cannot be PSD unless B = 0, "
            "so both laws are degenerate",
        )
    return Verdict(
        outcome=COUNTEREXAMPLE_EXISTS,
        rationale="alpha real, a < 0: any nonscalar PSD B with A = (-a) B gives "
        "independent forms from wide-sense laws",
    )


def classify_heyde(alpha) -> Verdict:
    """Conditional-symmetry setting for L1 = xi1 + xi2, L2 = xi1 + alpha xi2.

    The substitution behind heyde_reduction turns the question into the
    independence one at beta = (1+alpha)^2/(4 alpha), so the verdict is
    classify_skitovich_darmois(beta); the branches below evaluate that
    composition directly from alpha, which stays stable when beta
    underflows near the excluded point alpha = -1.
    """
    s = as_scalar(alpha)
    if is_zero(s, REAL_TOL):
        raise ValueError("alpha must be nonzero")
    if is_real(s):
        if abs(s.a + 1.0) < REAL_TOL:
            return Verdict(
                outcome=EXCLUDED,
                rationale="alpha = -1: the reduction to independent forms "
                "divides by 1 + alpha",
            )
        if s.a > 0:
            return Verdict(
                outcome=DEGENERATE_FORCED,
                rationale="alpha real, a > 0: reduced coefficient "
                "beta = (1+alpha)^2/(4 alpha) is positive, forcing degenerate laws",
            )
        return Verdict(
            outcome=COUNTEREXAMPLE_EXISTS,
            rationale="alpha real, a < 0, a != -1: reduced coefficient "
            "beta = (1+alpha)^2/(4 alpha) is negative, so a wide-sense family exists",
        )
    if abs(norm_squared(s) - 1.0) <= REAL_TOL:
        return Verdict(
            outcome=DEGENERATE_FORCED,
            rationale="imag(alpha) != 0 with |alpha| = 1: beta = (1+alpha)^2/(4 alpha) "
            "is real and positive, forcing degenerate laws",
        )
    return Verdict(
        outcome=DEGENERATE_FORCED,
        rationale="imag(alpha) != 0 with |alpha| != 1: beta = (1+alpha)^2/(4 alpha) "
        "has a nonzero imaginary part, forcing degenerate laws",
    )


def heyde_reduction(alpha) -> HeydeReduction:
    """Reduce the symmetry question to the independence one.

    Substituting M1 = (1+alpha) xi1 + 2 alpha xi2 and M2 = 2 xi1 +
    (1+alpha) xi2 turns the symmetry of L2 given L1 into independence of
    forms with coefficient pair (1, beta), beta = (1+alpha)^2/(4 alpha).
    Expanded over the components, beta = (p, q-part) with

        p = (a + 2 + a/|alpha|^2) / 4,
        q-part = imag(alpha) (1 - 1/|alpha|^2) / 4.

    Case labels: C when alpha is real, B when |alpha| = 1 (beta real
    with p > 0), A otherwise.
    """
    s = as_scalar(alpha)
    if is_zero(s, REAL_TOL):
        raise ValueError("alpha must be nonzero")
    if is_real(s) and abs(s.a + 1.0) < REAL_TOL:
        raise ValueError("alpha = -1 is excluded: the reduction divides by 1 + alpha")
    one_plus = s + 1.0
    beta = multiply(multiply(one_plus, one_plus), inverse(4.0 * s))
    nsq = norm_squared(s)
    p = 0.25 * (s.a + 2.0 + s.a / nsq)
    factor = 0.25 * (1.0 - 1.0 / nsq)
    q = abs(factor) * math.sqrt(math.fsum(x * x for x in s.imag))
    if is_real(s):
        case = "C"
    elif abs(nsq - 1.0) <= REAL_TOL:
        case = "B"
    else:
        case = "A"
    return HeydeReduction(beta=beta, p=p, q=q, case=case)


def heyde_to_sd_forms(alpha) -> tuple[LinearFormSpec, LinearFormSpec]:
    """Substitution forms M1 = (1+alpha) xi1 + 2 alpha xi2, M2 = 2 xi1 + (1+alpha) xi2.

    Independence of M1 and M2 is equivalent to the conditional symmetry
    of L2 = xi1 + alpha xi2 given L1 = xi1 + xi2.  Raises for alpha = -1,
    where the first coefficient collapses to zero.
    """
    s = as_scalar(alpha)
    if is_zero(s, REAL_TOL):
        raise ValueError("alpha must be nonzero")
    one = real_scalar(1.0, s.kind)
    two = real_scalar(2.0, s.kind)
    m1 = LinearFormSpec((one + s, 2.0 * s))
    m2 = LinearFormSpec((two, one + s))
    return m1, m2


def _negative_real_scaling(alpha, dim: int, exclude_minus_one: bool) -> float:
    kind = _kind_for_dim(dim)
    s = as_scalar(alpha, kind)
    if s.kind != kind:
        raise ValueError(f"alpha kind {s.kind} does not act on dim {dim}")
    if is_zero(s, REAL_TOL):
        raise ValueError("alpha must be nonzero")
    if not is_real(s):
        raise ValueError("no counterexample: imag(alpha) != 0 forces degenerate laws")
    if exclude_minus_one and abs(s.a + 1.0) < REAL_TOL:
        raise ValueError("alpha = -1 is excluded")
    if s.a > 0:
        raise ValueError("no counterexample: alpha real with a > 0 forces degenerate laws")
    return s.a


def _validated_nonscalar(matrix, dim: int, name: str) -> np.ndarray:
    matrix = np.asarray(matrix, dtype=float)
    if matrix.shape != (dim, dim):
        raise ValueError(f"{name} must be {dim}x{dim}, got {matrix.shape}")
    law = make_gaussian(np.zeros(dim), matrix)
    if is_narrow_sense(law, NARROW_SENSE_TOL):
        raise ValueError(f"{name} must not be a multiple of the identity")
    return matrix


def construct_sd_counterexample(alpha, B) -> tuple[GaussianLaw, GaussianLaw]:
    """Wide-sense laws with independent L1 = xi1 + xi2, L2 = xi1 + alpha xi2.

    Requires real alpha = a < 0 and a nonscalar symmetric PSD B; returns
    zero-mean laws with shapes (-a) B and B.  The pair satisfies the
    criterion A1 + A2 M(conj(alpha)) = 0 exactly.
    """
    B = np.asarray(B, dtype=float)
    if B.ndim != 2 or B.shape[0] != B.shape[1] or B.shape[0] not in (2, 4):
        raise ValueError(f"B must be a 2x2 or 4x4 matrix, got shape {B.shape}")
    dim = B.shape[0]
    a = _negative_real_scaling(alpha, dim, exclude_minus_one=False)
    B = _validated_nonscalar(B, dim, "B")
    law1 = make_gaussian(np.zeros(dim), (-a) * B)
    law2 = make_gaussian(np.zeros(dim), B)
    return law1, law2


def construct_heyde_counterexample(alpha, B) -> tuple[GaussianLaw, GaussianLaw]:
    """Wide-sense laws making L2 = xi1 + alpha xi2 conditionally symmetric
    around zero given L1 = xi1 + xi2.

    Requires real alpha = a < 0, a != -1, and a nonscalar symmetric PSD
    B; returns zero-mean laws with shapes (-a) B and B, which satisfy
    the symmetry identity exactly.
    """
    B = np.asarray(B, dtype=float)
    if B.ndim != 2 or B.shape[0] != B.shape[1] or B.shape[0] not in (2, 4):
        raise ValueError(f"B must be a 2x2 or 4x4 matrix, got shape {B.shape}")
    dim = B.shape[0]
    a = _negative_real_scaling(alpha, dim, exclude_minus_one=True)
    B = _validated_nonscalar(B, dim, "B")
    law1 = make_gaussian(np.zeros(dim), (-a) * B)
    law2 = make_gaussian(np.zeros(dim), B)
    return law1, law2


def construct_proposition1(sigmas, betas, A) -> list[GaussianLaw]:
    """Laws with shapes sigma_j A for forms L1 = sum xi_j, L2 = sum beta_j xi_j.

    Requires positive reals sigma_j with sum_j sigma_j conj(beta_j) = 0
    (checked to Frobenius 1e-10 on the embeddings) and a nonscalar
    symmetric PSD A.  The resulting wide-sense laws leave L1 and L2
    independent for any such A.
    """
    betas = as_form(betas)
    sigmas = [float(x) for x in sigmas]
    if len(sigmas) != len(betas):
        raise ValueError("sigmas and betas must have equal length")
    if any(x <= 0 for x in sigmas):
        raise ValueError("sigmas must be positive")
    dim = betas.dim
    constraint = np.zeros((dim, dim))
    for sig, b in zip(sigmas, betas):
        constraint += sig * embed(conjugate(b))
    gap = float(np.linalg.norm(constraint))
    if gap >= CRITERION_TOL:
        raise ValueError(
            f"sum_j sigma_j conj(beta_j) must vanish; embedding norm {gap:.3e}"
        )
    A = _validated_nonscalar(A, dim, "A")
    return [make_gaussian(np.zeros(dim), sig * A) for sig in sigmas]
