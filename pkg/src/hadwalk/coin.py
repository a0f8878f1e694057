"""Two-state coin algebra, spinor fields on finite windows, and measures.

A coin is a 2x2 unitary acting on the internal (left/right) state of the
walker.  Spinor fields live on closed integer windows that always contain
the origin; the measure of a field is its site-wise squared norm.
"""

from dataclasses import dataclass, field

import numpy as np

from .errors import NotUnitaryError, WindowTooSmallError, ZeroInputError

UNITARITY_TOL = 1e-12

__all__ = [
    "CoinMatrix",
    "CoinDecomposition",
    "SpinorField",
    "Measure",
    "InitialVector",
    "validate_coin",
    "decompose",
    "measure_of",
    "hadamard",
    "identity_coin",
    "rotation_coin",
]


@dataclass(frozen=True)
class CoinMatrix:
    """Validated 2x2 unitary coin.  Construct through :func:`validate_coin`."""

    c11: complex
    c12: complex
    c21: complex
    c22: complex

    @property
    def matrix(self) -> np.ndarray:
        return np.array([[self.c11, self.c12], [self.c21, self.c22]],
                        dtype=np.complex128)

    @property
    def delta(self) -> complex:
        """Determinant c11*c22 - c12*c21 (unit modulus for a unitary coin)."""
        return self.c11 * self.c22 - self.c12 * self.c21

    @property
    def delta_tilde(self) -> complex:
        """The companion bilinear c11*c22 + c12*c21."""
        return self.c11 * self.c22 + self.c12 * self.c21


@dataclass(frozen=True)
class CoinDecomposition:
    """Split of a coin into its upper-row part P and lower-row part Q."""

    p: np.ndarray
    q: np.ndarray
    delta: complex
    delta_tilde: complex


def validate_coin(c11: complex, c12: complex, c21: complex, c22: complex) -> CoinMatrix:
    """Check unitarity entrywise and return the coin.

    Raises :class:`NotUnitaryError` when ``C C†`` differs from the identity
    by more than ``UNITARITY_TOL`` in any entry.
    """
    m = np.array([[c11, c12], [c21, c22]], dtype=np.complex128)
    if not np.all(np.isfinite(m.view(np.float64))):
        raise NotUnitaryError("non-finite entries", np.inf, UNITARITY_TOL)
    dev = m @ m.conj().T - np.eye(2)
    max_dev = float(np.abs(dev).max())
    if max_dev > UNITARITY_TOL:
        raise NotUnitaryError(np.abs(dev).tolist(), max_dev, UNITARITY_TOL)
    return CoinMatrix(complex(c11), complex(c12), complex(c21), complex(c22))


def decompose(coin: CoinMatrix) -> CoinDecomposition:
    """P keeps the top row (left-mover), Q the bottom row (right-mover)."""
    p = np.array([[coin.c11, coin.c12], [0, 0]], dtype=np.complex128)
    q = np.array([[0, 0], [coin.c21, coin.c22]], dtype=np.complex128)
    return CoinDecomposition(p, q, coin.delta, coin.delta_tilde)


def hadamard() -> CoinMatrix:
    s = 1.0 / np.sqrt(2.0)
    return validate_coin(s, s, s, -s)


def identity_coin() -> CoinMatrix:
    return validate_coin(1, 0, 0, 1)


def rotation_coin(zeta: float) -> CoinMatrix:
    """Real orthogonal coin [[cos z, sin z], [sin z, -cos z]]."""
    c, s = np.cos(zeta), np.sin(zeta)
    return validate_coin(c, s, s, -c)


@dataclass(frozen=True)
class SpinorField:
    """Spinors on the closed integer window [xmin, xmin + len - 1].

    ``values[i]`` is the two-component amplitude at site ``xmin + i``.
    The window must contain the origin.  Instances are immutable; the
    backing array is marked read-only.
    """

    xmin: int
    values: np.ndarray = field(repr=False)

    def __post_init__(self):
        v = np.ascontiguousarray(self.values, dtype=np.complex128)
        if v.ndim != 2 or v.shape[1] != 2 or v.shape[0] < 1:
            raise ValueError(f"expected an (n, 2) array of spinors, got shape {v.shape}")
        if not (self.xmin <= 0 <= self.xmin + v.shape[0] - 1):
            raise WindowTooSmallError(
                f"window [{self.xmin}, {self.xmin + v.shape[0] - 1}] does not contain the origin"
            )
        v = v.copy()
        v.setflags(write=False)
        object.__setattr__(self, "values", v)

    @property
    def xmax(self) -> int:
        return self.xmin + self.values.shape[0] - 1

    def sites(self) -> np.ndarray:
        return np.arange(self.xmin, self.xmax + 1)

    def at(self, x: int) -> np.ndarray:
        if not self.xmin <= x <= self.xmax:
            raise IndexError(f"site {x} outside window [{self.xmin}, {self.xmax}]")
        return self.values[x - self.xmin]

    def __len__(self) -> int:
        return self.values.shape[0]


@dataclass(frozen=True)
class Measure:
    """Nonnegative site weights on a closed window containing the origin."""

    xmin: int
    values: np.ndarray = field(repr=False)

    def __post_init__(self):
        v = np.ascontiguousarray(self.values, dtype=np.float64)
        if v.ndim != 1 or v.shape[0] < 1:
            raise ValueError(f"expected a 1-d array of weights, got shape {v.shape}")
        if np.any(v < 0):
            raise ValueError("measure values must be nonnegative")
        if not (self.xmin <= 0 <= self.xmin + v.shape[0] - 1):
            raise WindowTooSmallError("measure window does not contain the origin")
        v = v.copy()
        v.setflags(write=False)
        object.__setattr__(self, "values", v)

    @property
    def xmax(self) -> int:
        return self.xmin + self.values.shape[0] - 1

    def sites(self) -> np.ndarray:
        return np.arange(self.xmin, self.xmax + 1)

    def at(self, x: int) -> float:
        if not self.xmin <= x <= self.xmax:
            raise IndexError(f"site {x} outside window [{self.xmin}, {self.xmax}]")
        return float(self.values[x - self.xmin])

    def __len__(self) -> int:
        return self.values.shape[0]


def measure_of(field: SpinorField) -> Measure:
    """Site-wise squared norm |L|^2 + |R|^2 on the same window."""
    v = field.values
    w = v.real * v.real + v.imag * v.imag
    return Measure(field.xmin, w[:, 0] + w[:, 1])


@dataclass(frozen=True)
class InitialVector:
    """Nonzero seed spinor at the origin."""

    phi1: complex
    phi2: complex

    def __post_init__(self):
        if self.phi1 == 0 and self.phi2 == 0:
            raise ZeroInputError("initial spinor must be nonzero")
        object.__setattr__(self, "phi1", complex(self.phi1))
        object.__setattr__(self, "phi2", complex(self.phi2))

    def as_array(self) -> np.ndarray:
        return np.array([self.phi1, self.phi2], dtype=np.complex128)

    @property
    def norm_sq(self) -> float:
        return abs(self.phi1) ** 2 + abs(self.phi2) ** 2
