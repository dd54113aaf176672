"""Gaussian laws on R^2 and R^4 defined through characteristic functions.

A law with mean vector x and shape matrix A has characteristic function

    phi(y) = exp{ i<x, y> - <A y, y> },

so the covariance of the underlying random vector is 2A.  Working with
the shape matrix keeps the exponent free of 1/2 factors.  A law is
narrow-sense when A is a nonnegative multiple of the identity, and
degenerate when A = 0 (a point mass).
"""

from __future__ import annotations

import io
from dataclasses import dataclass

import numpy as np

# Absolute tolerances for validating and classifying shape matrices.
SYMMETRY_TOL = 1e-12
EIGENVALUE_FLOOR = -1e-10
NARROW_SENSE_TOL = 1e-9
DEGENERATE_TOL = 1e-12


@dataclass(frozen=True)
class GaussianLaw:
    """Immutable mean/shape pair; build through make_gaussian."""

    mean: np.ndarray
    shape: np.ndarray

    @property
    def dim(self) -> int:
        return self.mean.shape[0]


def make_gaussian(mean, shape) -> GaussianLaw:
    """Validate and freeze a Gaussian law.

    mean must have length 2 or 4 and shape must be a symmetric positive
    semidefinite matrix of matching size.  Symmetry is checked to an
    absolute 1e-12 and eigenvalues may dip to -1e-10 to absorb rounding.
    """
    mean = np.asarray(mean, dtype=float)
    shape = np.asarray(shape, dtype=float)
    if mean.ndim != 1 or mean.shape[0] not in (2, 4):
        raise ValueError(f"mean must be a vector of length 2 or 4, got shape {mean.shape}")
    dim = mean.shape[0]
    if shape.shape != (dim, dim):
        raise ValueError(f"shape matrix must be {dim}x{dim}, got {shape.shape}")
    asym = float(np.abs(shape - shape.T).max())
    if asym > SYMMETRY_TOL:
        raise ValueError(f"shape matrix is not symmetric (max asymmetry {asym:.3e})")
    lo = float(np.linalg.eigvalsh(shape).min())
    if lo < EIGENVALUE_FLOOR:
        raise ValueError(f"shape matrix is not positive semidefinite (eigenvalue {lo:.3e})")
    mean = mean.copy()
    shape = shape.copy()
    mean.flags.writeable = False
    shape.flags.writeable = False
    return GaussianLaw(mean=mean, shape=shape)


def char_function(law: GaussianLaw, y) -> np.ndarray:
    """Characteristic function at y, a vector (dim,) or batch (m, dim)."""
    y = np.asarray(y, dtype=float)
    if y.shape[-1] != law.dim:
        raise ValueError(f"argument dimension {y.shape[-1]} does not match law dim {law.dim}")
    lin = y @ law.mean
    quad = np.einsum("...i,ij,...j->...", y, law.shape, y)
    return np.exp(1j * lin - quad)


def is_narrow_sense(law: GaussianLaw, tol: float = NARROW_SENSE_TOL) -> bool:
    """True when the shape matrix is (numerically) a multiple of the identity."""
    off = law.shape - np.diag(np.diag(law.shape))
    diag = np.diag(law.shape)
    return float(np.abs(off).max()) < tol and float(diag.max() - diag.min()) < tol


def is_degenerate(law: GaussianLaw, tol: float = DEGENERATE_TOL) -> bool:
    """True when the law is a point mass (shape matrix vanishes)."""
    return float(np.abs(law.shape).max()) < tol


def _generator(seed) -> np.random.Generator:
    """Philox generator from an int seed or a SeedSequence."""
    if isinstance(seed, np.random.SeedSequence):
        ss = seed
    else:
        ss = np.random.SeedSequence(int(seed))
    return np.random.Generator(np.random.Philox(ss))


def _standard_normals(rng: np.random.Generator, count: int) -> np.ndarray:
    # Box-Muller on counter-based uniforms keeps the stream reproducible
    # under any future batching change; log1p(-u) avoids log(0).
    pairs = (count + 1) // 2
    u1 = rng.random(pairs)
    u2 = rng.random(pairs)
    r = np.sqrt(-2.0 * np.log1p(-u1))
    theta = (2.0 * np.pi) * u2
    return np.concatenate([r * np.cos(theta), r * np.sin(theta)])[:count]


@dataclass(frozen=True)
class SampleBatch:
    """n rows drawn from one law, with the seed that produced them."""

    dim: int
    n: int
    rows: np.ndarray
    seed: object

    def __post_init__(self):
        rows = np.asarray(self.rows, dtype=float)
        if rows.shape != (self.n, self.dim):
            raise ValueError(f"rows must have shape ({self.n}, {self.dim}), got {rows.shape}")
        rows = rows.copy()
        rows.flags.writeable = False
        object.__setattr__(self, "rows", rows)

    def to_csv(self, target) -> None:
        """Write rows as CSV with header x1,...,xdim."""
        header = ",".join(f"x{i + 1}" for i in range(self.dim))
        if hasattr(target, "write"):
            np.savetxt(target, self.rows, fmt="%.17g", delimiter=",",
                       header=header, comments="")
        else:
            with open(target, "w") as fh:
                np.savetxt(fh, self.rows, fmt="%.17g", delimiter=",",
                           header=header, comments="")

    def to_csv_text(self) -> str:
        buf = io.StringIO()
        self.to_csv(buf)
        return buf.getvalue()


def sample(law: GaussianLaw, n: int, seed) -> SampleBatch:
    """Draw n rows; deterministic in (law, n, seed).

    The shape matrix is factored by eigendecomposition and eigenvalues
    below max*1e-12 are zeroed, so degenerate directions carry exactly
    zero noise and a point mass returns constant rows equal to the mean.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    rng = _generator(seed)
    w, q = np.linalg.eigh(law.shape)
    w = np.clip(w, 0.0, None)
    if w.max() > 0.0:
        w[w < w.max() * 1e-12] = 0.0
    scale = np.sqrt(2.0 * w)
    z = _standard_normals(rng, n * law.dim).reshape(n, law.dim)
    rows = law.mean + (z * scale) @ q.T
    return SampleBatch(dim=law.dim, n=n, rows=rows, seed=seed)


def law_to_dict(law: GaussianLaw) -> dict:
    return {
        "dim": law.dim,
        "mean": law.mean.tolist(),
        "shape": law.shape.tolist(),
    }


def law_from_dict(d: dict) -> GaussianLaw:
    law = make_gaussian(d["mean"], d["shape"])
    if "dim" in d and int(d["dim"]) != law.dim:
        raise ValueError(f"declared dim {d['dim']} does not match mean length {law.dim}")
    return law
