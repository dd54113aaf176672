"""Complex and quaternion scalars and their real matrix embeddings.

A complex number a+bi acts on R^2 by the matrix [[a, -b], [b, a]]; a
quaternion a+bi+cj+dk acts on R^4 by the analogous 4x4 matrix.  Under
this map scalar multiplication becomes matrix multiplication, so linear
forms with hypercomplex coefficients turn into matrix-coefficient
linear forms of real random vectors.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

COMPLEX = "complex"
QUATERNION = "quaternion"

# Components with absolute value below this are treated as zero when
# deciding realness at classification boundaries.
REAL_TOL = 1e-12

_NCOMP = {COMPLEX: 2, QUATERNION: 4}
_UNITS = {COMPLEX: ("", "i"), QUATERNION: ("", "i", "j", "k")}


@dataclass(frozen=True)
class HypercomplexScalar:
    """A complex number (a, b) or a quaternion (a, b, c, d) over float64."""

    kind: str
    components: tuple[float, ...]

    def __post_init__(self):
        if self.kind not in _NCOMP:
            raise ValueError(f"unknown scalar kind: {self.kind!r}")
        comps = tuple(float(c) for c in self.components)
        if len(comps) != _NCOMP[self.kind]:
            raise ValueError(
                f"{self.kind} scalar takes {_NCOMP[self.kind]} components, "
                f"got {len(comps)}"
            )
        object.__setattr__(self, "components", comps)

    @property
    def a(self) -> float:
        """Real part."""
        return self.components[0]

    @property
    def imag(self) -> tuple[float, ...]:
        """Imaginary components (length 1 or 3)."""
        return self.components[1:]

    @property
    def dim(self) -> int:
        """Dimension of the real space the scalar acts on (2 or 4)."""
        return _NCOMP[self.kind]

    def __add__(self, other):
        other = as_scalar(other, self.kind)
        return HypercomplexScalar(
            self.kind,
            tuple(x + y for x, y in zip(self.components, other.components)),
        )

    __radd__ = __add__

    def __sub__(self, other):
        other = as_scalar(other, self.kind)
        return HypercomplexScalar(
            self.kind,
            tuple(x - y for x, y in zip(self.components, other.components)),
        )

    def __rsub__(self, other):
        return as_scalar(other, self.kind) - self

    def __neg__(self):
        return HypercomplexScalar(self.kind, tuple(-x for x in self.components))

    def __mul__(self, other):
        return multiply(self, as_scalar(other, self.kind))

    def __rmul__(self, other):
        return multiply(as_scalar(other, self.kind), self)

    def __str__(self):
        return format_scalar(self)

    def to_dict(self) -> dict:
        out = {"kind": self.kind}
        for name, value in zip("abcd", self.components):
            out[name] = value
        return out


def cplx(a: float, b: float = 0.0) -> HypercomplexScalar:
    return HypercomplexScalar(COMPLEX, (a, b))


def quat(a: float, b: float = 0.0, c: float = 0.0, d: float = 0.0) -> HypercomplexScalar:
    return HypercomplexScalar(QUATERNION, (a, b, c, d))


def real_scalar(x: float, kind: str = COMPLEX) -> HypercomplexScalar:
    """The real number x viewed as a scalar of the given kind."""
    if kind not in _NCOMP:
        raise ValueError(f"unknown scalar kind: {kind!r}")
    return HypercomplexScalar(kind, (float(x),) + (0.0,) * (_NCOMP[kind] - 1))


def as_scalar(value, kind: str | None = None) -> HypercomplexScalar:
    """Coerce a number, python complex, or HypercomplexScalar.

    Plain reals become real scalars of `kind` (complex when kind is not
    given).  Python complex values map to complex kind only.
    """
    if isinstance(value, HypercomplexScalar):
        if kind is not None and value.kind != kind:
            raise ValueError(f"expected a {kind} scalar, got {value.kind}")
        return value
    if isinstance(value, complex):
        if kind not in (None, COMPLEX):
            raise ValueError("python complex values only coerce to complex kind")
        return cplx(value.real, value.imag)
    if isinstance(value, (int, float, np.integer, np.floating)):
        return real_scalar(float(value), kind or COMPLEX)
    raise TypeError(f"cannot interpret {value!r} as a hypercomplex scalar")


def embed(s: HypercomplexScalar) -> np.ndarray:
    """Real matrix of left multiplication by s (2x2 or 4x4)."""
    if s.kind == COMPLEX:
        a, b = s.components
        return np.array([[a, -b], [b, a]])
    a, b, c, d = s.components
    return np.array(
        [
            [a, -b, -c, -d],
            [b, a, -d, c],
            [c, d, a, -b],
            [d, -c, b, a],
        ]
    )


def conjugate(s: HypercomplexScalar) -> HypercomplexScalar:
    return HypercomplexScalar(
        s.kind, (s.components[0],) + tuple(-x for x in s.components[1:])
    )


def multiply(s: HypercomplexScalar, t: HypercomplexScalar) -> HypercomplexScalar:
    """Product s*t; quaternion order matters."""
    if s.kind != t.kind:
        raise ValueError(f"kind mismatch: {s.kind} * {t.kind}")
    if s.kind == COMPLEX:
        a1, b1 = s.components
        a2, b2 = t.components
        return cplx(a1 * a2 - b1 * b2, a1 * b2 + b1 * a2)
    a1, b1, c1, d1 = s.components
    a2, b2, c2, d2 = t.components
    return quat(
        a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
        a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
        a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
        a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
    )


def norm_squared(s: HypercomplexScalar) -> float:
    return math.fsum(x * x for x in s.components)


def inverse(s: HypercomplexScalar) -> HypercomplexScalar:
    """Multiplicative inverse conj(s)/|s|^2."""
    nsq = norm_squared(s)
    if nsq == 0.0:
        raise ZeroDivisionError("zero scalar has no inverse")
    c = conjugate(s)
    return HypercomplexScalar(s.kind, tuple(x / nsq for x in c.components))


def is_zero(s: HypercomplexScalar, tol: float = 0.0) -> bool:
    return max(abs(x) for x in s.components) <= tol


def is_real(s: HypercomplexScalar, tol: float = REAL_TOL) -> bool:
    """True when every imaginary component is below tol in magnitude."""
    return max(abs(x) for x in s.imag) < tol


def scalar_from_embedding(M) -> HypercomplexScalar:
    """Recover the scalar from its embedding matrix.

    Raises ValueError when M does not have the embedding structure.
    """
    M = np.asarray(M, dtype=float)
    if M.shape == (2, 2):
        s = cplx(M[0, 0], M[1, 0])
    elif M.shape == (4, 4):
        s = quat(M[0, 0], M[1, 0], M[2, 0], M[3, 0])
    else:
        raise ValueError(f"expected a 2x2 or 4x4 matrix, got shape {M.shape}")
    tol = 1e-12 * max(1.0, float(np.abs(M).max()))
    if not np.allclose(M, embed(s), rtol=0.0, atol=tol):
        raise ValueError("matrix does not embed a hypercomplex scalar")
    return s


def scalar_from_dict(d: dict) -> HypercomplexScalar:
    kind = d["kind"]
    if kind not in _NCOMP:
        raise ValueError(f"unknown scalar kind: {kind!r}")
    names = "abcd"[: _NCOMP[kind]]
    return HypercomplexScalar(kind, tuple(float(d[name]) for name in names))


def format_scalar(s: HypercomplexScalar) -> str:
    """Canonical text form, e.g. '-2+0i' or '1+1i+0j-1k'."""
    parts = []
    for value, unit in zip(s.components, _UNITS[s.kind]):
        sign = "-" if value < 0 or (value == 0 and math.copysign(1, value) < 0) else "+"
        parts.append(f"{sign}{format(abs(value), '.17g')}{unit}")
    text = "".join(parts)
    return text[1:] if text.startswith("+") else text
