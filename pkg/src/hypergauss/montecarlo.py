"""Monte Carlo checks on sampled linear forms.

Constructed laws claim exact distributional properties (independence of
two forms, conditional symmetry of one given the other).  The tests
here attack those claims from data alone: a cheap cross-covariance
z-test, a permutation test on empirical distance covariance, and a
two-sample energy test of the joint law (L1, L2) against (L1, -L2).
All randomness is derived from explicit integer seeds; a given
(input, n, seed) triple always reproduces the same verdict.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.spatial.distance import cdist
from scipy.stats import norm as _normal

from .algebra import embed
from .characterize import as_form, _infer_kind
from .gaussian import GaussianLaw, sample

CONSISTENT_WITH_NULL = "ConsistentWithNull"
REJECT_NULL = "RejectNull"

DEFAULT_ALPHA_LEVEL = 0.01
DEFAULT_Z_THRESHOLD = 4.0
MAX_PAIRWISE_N = 4000


@dataclass(frozen=True)
class FormSamplePair:
    """Joint draws of two linear forms built from shared inputs."""

    l1_rows: np.ndarray
    l2_rows: np.ndarray
    seed: int

    def __post_init__(self):
        l1 = np.asarray(self.l1_rows, dtype=float)
        l2 = np.asarray(self.l2_rows, dtype=float)
        if l1.ndim != 2 or l1.shape != l2.shape:
            raise ValueError(
                f"l1_rows and l2_rows must have equal 2-d shapes, got {l1.shape} and {l2.shape}"
            )
        for name, arr in (("l1_rows", l1), ("l2_rows", l2)):
            arr = arr.copy()
            arr.flags.writeable = False
            object.__setattr__(self, name, arr)

    @property
    def n(self) -> int:
        return self.l1_rows.shape[0]

    @property
    def dim(self) -> int:
        return self.l1_rows.shape[1]


@dataclass(frozen=True)
class TestResult:
    statistic: float
    p_value: float
    n: int
    seed: int
    verdict: str
    method: str
    alpha_level: float

    def to_dict(self) -> dict:
        return {
            "statistic": self.statistic,
            "p_value": self.p_value,
            "n": self.n,
            "seed": self.seed,
            "verdict": self.verdict,
            "method": self.method,
        }


def _child_seed(seed: int, index: int) -> np.random.SeedSequence:
    return np.random.SeedSequence([int(seed), int(index)])


def sample_linear_forms(laws, alphas, betas, n: int, seed: int) -> FormSamplePair:
    """Draw xi_j independently and assemble L1 = sum a_j xi_j, L2 = sum b_j xi_j.

    Each law gets its own child stream of `seed`, so the pair is
    reproducible and the inputs are mutually independent.
    """
    kind = _infer_kind(laws, alphas, betas)
    alphas = as_form(alphas, kind)
    betas = as_form(betas, alphas.kind)
    if len(laws) != len(alphas) or len(alphas) != len(betas):
        raise ValueError("laws, alphas and betas must have equal length")
    dim = alphas.dim
    l1 = np.zeros((n, dim))
    l2 = np.zeros((n, dim))
    for j, law in enumerate(laws):
        if not isinstance(law, GaussianLaw):
            raise TypeError(f"law {j} must be a GaussianLaw")
        if law.dim != dim:
            raise ValueError(f"law {j} has dim {law.dim}, coefficients act on dim {dim}")
        rows = sample(law, n, _child_seed(seed, j)).rows
        l1 += rows @ embed(alphas.coefficients[j]).T
        l2 += rows @ embed(betas.coefficients[j]).T
    return FormSamplePair(l1_rows=l1, l2_rows=l2, seed=int(seed))


def sample_forms(law1, law2, alphas, betas, n: int, seed: int) -> FormSamplePair:
    """Two-variable version: L1 = a1 xi1 + a2 xi2, L2 = b1 xi1 + b2 xi2."""
    kind = _infer_kind([law1, law2], alphas, betas)
    alphas = as_form(alphas, kind)
    betas = as_form(betas, alphas.kind)
    if len(alphas) != 2 or len(betas) != 2:
        raise ValueError("sample_forms takes exactly two coefficients per form")
    return sample_linear_forms([law1, law2], alphas, betas, n, seed)


def cross_covariance_test(pair: FormSamplePair,
                          z_threshold: float = DEFAULT_Z_THRESHOLD) -> TestResult:
    """z-test on every entry of the cross-covariance of (L1, L2).

    Under independence each entry of cov(L1, L2) has standard error
    about sqrt(var(L1_i) var(L2_j) / n); the statistic is the largest
    absolute z-score over the dim x dim entries and the p-value is the
    Bonferroni-corrected two-sided normal tail.
    """
    n = pair.n
    if n < 2:
        raise ValueError("need at least two rows")
    x = pair.l1_rows - pair.l1_rows.mean(axis=0)
    y = pair.l2_rows - pair.l2_rows.mean(axis=0)
    cross = x.T @ y / n
    vx = (x * x).mean(axis=0)
    vy = (y * y).mean(axis=0)
    se = np.sqrt(np.outer(vx, vy) / n)
    z = np.zeros_like(cross)
    live = se > 0
    z[live] = cross[live] / se[live]
    z[~live & (np.abs(cross) > 0)] = np.inf
    stat = float(np.abs(z).max())
    cells = cross.size
    p = float(min(1.0, 2.0 * cells * _normal.sf(stat)))
    verdict = REJECT_NULL if stat > z_threshold else CONSISTENT_WITH_NULL
    return TestResult(statistic=stat, p_value=p, n=n, seed=pair.seed,
                      verdict=verdict, method="cross_covariance",
                      alpha_level=float(z_threshold))


def _double_centered(d: np.ndarray) -> np.ndarray:
    row = d.mean(axis=0, keepdims=True)
    col = d.mean(axis=1, keepdims=True)
    return d - row - col + d.mean()


def _permutation_matrix(n: int, permutations: int, seed: int) -> np.ndarray:
    out = np.empty((permutations, n), dtype=np.int64)
    for k in range(permutations):
        rng = np.random.Generator(np.random.Philox(_child_seed(seed, k)))
        out[k] = rng.permutation(n)
    return out


def distance_covariance_test(pair: FormSamplePair, permutations: int = 199,
                             seed: int = 0,
                             alpha_level: float = DEFAULT_ALPHA_LEVEL) -> TestResult:
    """Permutation test on the empirical distance covariance of (L1, L2).

    The statistic is the V-statistic estimate of dCov(L1, L2), which is
    zero iff the forms are independent; rows of L2 are permuted to
    build the reference distribution.  p = (1 + #{permuted >= observed})
    / (permutations + 1), and the verdict rejects when p <= alpha_level.

    Memory and time are quadratic in n, so n is capped at 4000.
    """
    n = pair.n
    if n > MAX_PAIRWISE_N:
        raise ValueError(f"n = {n} exceeds the pairwise-distance cap {MAX_PAIRWISE_N}")
    if n < 4:
        raise ValueError("need at least four rows")
    if permutations < 99:
        raise ValueError("use at least 99 permutations")
    a = _double_centered(cdist(pair.l1_rows, pair.l1_rows))
    b = _double_centered(cdist(pair.l2_rows, pair.l2_rows))
    observed = float((a * b).sum())
    perms = _permutation_matrix(n, permutations, seed)
    from ._kernels import permuted_products

    reference = permuted_products(a, b, perms)
    exceed = int((reference >= observed).sum())
    p = (1.0 + exceed) / (permutations + 1.0)
    stat = float(np.sqrt(max(observed, 0.0) / (n * n)))
    verdict = REJECT_NULL if p <= alpha_level else CONSISTENT_WITH_NULL
    return TestResult(statistic=stat, p_value=p, n=n, seed=pair.seed,
                      verdict=verdict, method="distance_covariance",
                      alpha_level=float(alpha_level))


def conditional_symmetry_test(pair: FormSamplePair, permutations: int = 199,
                              seed: int = 0,
                              alpha_level: float = DEFAULT_ALPHA_LEVEL) -> TestResult:
    """Two-sample energy test of (L1, L2) against (L1, -L2).

    Conditional symmetry of L2 around zero given L1 means the joint law
    equals its reflection, so the energy distance between the two point
    clouds should be indistinguishable from relabeling noise.  Each
    pooled point is paired with its mirror, and the reference labelings
    swap labels within pairs only (points of one pair are exchangeable
    under the null; the pooled cloud as a whole is not), which keeps
    the test exact.  p and the verdict follow the same rule as the
    distance-covariance test.  When L2 is identically zero the two
    clouds coincide and the statistic is exactly zero.
    """
    n = pair.n
    if n > MAX_PAIRWISE_N:
        raise ValueError(f"n = {n} exceeds the pairwise-distance cap {MAX_PAIRWISE_N}")
    if n < 4:
        raise ValueError("need at least four rows")
    if permutations < 99:
        raise ValueError("use at least 99 permutations")
    plus = np.hstack([pair.l1_rows, pair.l2_rows])
    minus = np.hstack([pair.l1_rows, -pair.l2_rows])
    pooled = np.vstack([plus, minus])
    total = 2 * n
    d = cdist(pooled, pooled)
    # One mask column per labeling; a single GEMM evaluates every
    # within/between distance sum at once.  Row i pairs with row n+i.
    masks = np.zeros((total, permutations + 1))
    masks[:n, 0] = 1.0
    base = np.arange(n)
    for k in range(permutations):
        rng = np.random.Generator(np.random.Philox(_child_seed(seed, k)))
        flips = rng.integers(0, 2, size=n).astype(bool)
        masks[np.where(flips, base + n, base), k + 1] = 1.0
    reach = d @ masks
    s_aa = np.einsum("ik,ik->k", masks, reach)
    row_tot = reach.sum(axis=0)
    s_ab = row_tot - s_aa
    s_bb = d.sum() - 2.0 * row_tot + s_aa
    energy = (2.0 * s_ab - s_aa - s_bb) / float(n * n)
    # Identical clouds give energies at rounding level; snap those to
    # zero so ties resolve deterministically instead of by noise sign.
    scale = float(d.mean())
    energy[np.abs(energy) < 1e-12 * scale] = 0.0
    observed = float(energy[0])
    reference = energy[1:]
    exceed = int((reference >= observed).sum())
    p = (1.0 + exceed) / (permutations + 1.0)
    verdict = REJECT_NULL if p <= alpha_level else CONSISTENT_WITH_NULL
    return TestResult(statistic=observed, p_value=p, n=n, seed=pair.seed,
                      verdict=verdict, method="conditional_symmetry",
                      alpha_level=float(alpha_level))
