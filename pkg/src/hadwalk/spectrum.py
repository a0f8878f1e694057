"""Momentum-space symbol of the walk and its spectral arcs.

Fourier transforming the walk turns it into a k-dependent 2x2 unitary;
sweeping k and collecting the eigenvalue phases traces out the spectrum
of the full operator on the unit circle.
"""

from dataclasses import dataclass

import numpy as np

from .coin import CoinMatrix

TWO_PI = 2.0 * np.pi

__all__ = [
    "fourier_symbol",
    "SymbolEigenvalues",
    "symbol_eigenvalues",
    "symbol_eigenvector",
    "hadamard_symbol_eigenvalues",
    "dispersion_table",
    "spectrum_arcs",
]


def fourier_symbol(coin: CoinMatrix, k: float) -> np.ndarray:
    """The 2x2 unitary acting on momentum fiber k: the coin with its top
    row phased by e^{ik} and bottom row by e^{-ik}."""
    up = np.exp(1j * k)
    dn = np.exp(-1j * k)
    return np.array(
        [[up * coin.c11, up * coin.c12], [dn * coin.c21, dn * coin.c22]],
        dtype=np.complex128,
    )


@dataclass(frozen=True)
class SymbolEigenvalues:
    """Unit-circle eigenvalue pair of the symbol at momentum k."""

    k: float
    lambda1: complex
    lambda2: complex


def symbol_eigenvalues(coin: CoinMatrix, k: float) -> SymbolEigenvalues:
    """Eigenvalues of the symbol by the closed 2x2 quadratic formula.

    Ordered by descending real part (ties by imaginary part) so the
    Hadamard pair matches its textbook closed form.
    """
    m = fourier_symbol(coin, k)
    tr = m[0, 0] + m[1, 1]
    det = m[0, 0] * m[1, 1] - m[0, 1] * m[1, 0]
    sq = np.sqrt(complex(tr * tr - 4.0 * det))
    v1 = (tr + sq) / 2.0
    v2 = (tr - sq) / 2.0
    if (v1.real, v1.imag) < (v2.real, v2.imag):
        v1, v2 = v2, v1
    return SymbolEigenvalues(k=float(k), lambda1=complex(v1), lambda2=complex(v2))


def symbol_eigenvector(coin: CoinMatrix, k: float, lam: complex) -> np.ndarray:
    """A unit eigenvector of the symbol for the given eigenvalue."""
    m = fourier_symbol(coin, k)
    cand1 = np.array([m[0, 1], lam - m[0, 0]], dtype=np.complex128)
    cand2 = np.array([lam - m[1, 1], m[1, 0]], dtype=np.complex128)
    v = cand1 if np.linalg.norm(cand1) >= np.linalg.norm(cand2) else cand2
    n = np.linalg.norm(v)
    if n == 0:  # scalar symbol: any direction works
        return np.array([1.0, 0.0], dtype=np.complex128)
    return v / n


def hadamard_symbol_eigenvalues(k: float):
    """Closed form for the Hadamard symbol: (+-sqrt(1+cos^2 k) + i sin k)/sqrt(2)."""
    root = np.sqrt(1.0 + np.cos(k) ** 2)
    return (
        (root + 1j * np.sin(k)) / np.sqrt(2.0),
        (-root + 1j * np.sin(k)) / np.sqrt(2.0),
    )


def dispersion_table(coin: CoinMatrix, grid_size: int) -> np.ndarray:
    """Rows (k, arg lambda1 mod 2*pi, arg lambda2 mod 2*pi) over a uniform
    momentum grid on [-pi, pi)."""
    ks = -np.pi + TWO_PI * np.arange(grid_size) / grid_size
    rows = np.empty((grid_size, 3))
    for i, k in enumerate(ks):
        ev = symbol_eigenvalues(coin, k)
        rows[i] = (k, np.angle(ev.lambda1) % TWO_PI, np.angle(ev.lambda2) % TWO_PI)
    return rows


def spectrum_arcs(coin: CoinMatrix, grid_size: int):
    """Maximal arcs (as [lo, hi] argument intervals in [0, 2*pi)) covered
    by the symbol eigenvalues over a k-grid of the given size.

    Collected phases are merged whenever consecutive sorted values are
    within three grid steps; arcs are reported cut at argument 0 rather
    than wrapped.
    """
    if grid_size < 16:
        raise ValueError(f"grid_size must be at least 16, got {grid_size}")
    table = dispersion_table(coin, grid_size)
    args = np.sort(np.concatenate([table[:, 1], table[:, 2]]))
    gap = 3.0 * TWO_PI / grid_size
    arcs = []
    lo = args[0]
    prev = args[0]
    for a in args[1:]:
        if a - prev > gap:
            arcs.append((float(lo), float(prev)))
            lo = a
        prev = a
    arcs.append((float(lo), float(prev)))
    return arcs
