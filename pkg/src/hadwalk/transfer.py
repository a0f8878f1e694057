"""Transfer matrices at a unit-circle eigenvalue and eigenfunctions built
by site-to-site iteration.

Along any eigenfunction of the walk, the spinor at site x+1 is a fixed
2x2 matrix times the spinor at x, and likewise going left with the
inverse matrix.  Iterating those two matrices from a seed at the origin
generates every eigenfunction; no diagonalization is involved, so the
construction stays exact at double-root eigenvalues.
"""

from dataclasses import dataclass

import numpy as np

from . import _kernels
from .coin import CoinMatrix, InitialVector, SpinorField, hadamard
from .errors import (
    AmplitudeOverflowError,
    NotOnUnitCircleError,
    ZeroCornerEntryError,
    ZeroInputError,
)

UNIT_CIRCLE_TOL = 1e-12
INVERSE_PAIR_TOL = 1e-12
CORNER_TOL = 1e-14
MAX_SITE = 10 ** 6

__all__ = [
    "TransferPair",
    "build_transfer",
    "boundary_values",
    "transfer_eigenfunction",
    "kls_eigenfunction",
]


@dataclass(frozen=True)
class TransferPair:
    """Mutually inverse forward/backward site maps at eigenvalue ``lam``."""

    t_plus: np.ndarray
    t_minus: np.ndarray
    lam: complex

    def __post_init__(self):
        ident = np.eye(2)
        dev = max(
            np.abs(self.t_plus @ self.t_minus - ident).max(),
            np.abs(self.t_minus @ self.t_plus - ident).max(),
        )
        if dev > INVERSE_PAIR_TOL:
            raise ValueError(
                f"transfer matrices are not mutually inverse (deviation {dev:.3e})"
            )
        self.t_plus.setflags(write=False)
        self.t_minus.setflags(write=False)


def _check_args(coin: CoinMatrix, lam: complex) -> None:
    if abs(coin.c11) <= CORNER_TOL:
        raise ZeroCornerEntryError(
            f"transfer matrices need c11 != 0, got c11 = {coin.c11!r}"
        )
    if abs(abs(lam) - 1.0) > UNIT_CIRCLE_TOL:
        raise NotOnUnitCircleError(
            f"|lambda| = {abs(lam)!r} is not 1 within {UNIT_CIRCLE_TOL}"
        )


def build_transfer(coin: CoinMatrix, lam: complex) -> TransferPair:
    """Forward matrix T+ and its inverse T- for the given eigenvalue."""
    _check_args(coin, lam)
    c11, c12, c21, c22 = coin.c11, coin.c12, coin.c21, coin.c22
    t_plus = np.array(
        [
            [(lam * lam - c12 * c21) / (c11 * lam), -c12 * c22 / (c11 * lam)],
            [c21 / lam, c22 / lam],
        ],
        dtype=np.complex128,
    )
    t_minus = np.array(
        [
            [c11 / lam, c12 / lam],
            [-c11 * c21 / (c22 * lam), (lam * lam - c12 * c21) / (c22 * lam)],
        ],
        dtype=np.complex128,
    )
    return TransferPair(t_plus, t_minus, complex(lam))


def boundary_values(coin: CoinMatrix, lam: complex, phi: InitialVector):
    """Spinors at sites +1 and -1 seeded from phi at the origin.

    Computed from the explicit first-step formulas; identical (to
    rounding) to applying the transfer pair to phi.
    """
    _check_args(coin, lam)
    c11, c12, c21, c22 = coin.c11, coin.c12, coin.c21, coin.c22
    p1, p2 = phi.phi1, phi.phi2
    psi_l_plus = (p1 * lam * lam - c12 * (c21 * p1 + c22 * p2)) / (c11 * lam)
    psi_r_plus = (c21 * p1 + c22 * p2) / lam
    psi_l_minus = (c11 * p1 + c12 * p2) / lam
    psi_r_minus = (p2 * lam * lam - c21 * (c11 * p1 + c12 * p2)) / (c22 * lam)
    plus = np.array([psi_l_plus, psi_r_plus], dtype=np.complex128)
    minus = np.array([psi_l_minus, psi_r_minus], dtype=np.complex128)
    return plus, minus


def transfer_eigenfunction(coin: CoinMatrix, lam: complex, phi: InitialVector,
                           xmin: int, xmax: int) -> SpinorField:
    """Eigenfunction on [xmin, xmax] by repeated matrix application.

    The window must contain the origin and stay within +-10^6 sites.
    Raises :class:`AmplitudeOverflowError` if the amplitudes leave the
    representable double range (exponential branches overflow near
    |x| ~ 700 at the worst growth rates).
    """
    if not xmin <= 0 <= xmax:
        raise ValueError(f"window [{xmin}, {xmax}] must contain the origin")
    if -xmin > MAX_SITE or xmax > MAX_SITE:
        raise ValueError(f"window [{xmin}, {xmax}] exceeds the +-{MAX_SITE} site cap")
    pair = build_transfer(coin, lam)
    with np.errstate(over="ignore", invalid="ignore"):
        values = _kernels.transfer_sequence(pair.t_plus, pair.t_minus,
                                            phi.as_array(), -xmin, xmax)
    if not np.all(np.isfinite(values.view(np.float64))):
        raise AmplitudeOverflowError(
            f"amplitudes overflow doubles on [{xmin}, {xmax}] at lambda = {lam!r}"
        )
    return SpinorField(xmin, values)


def _recurrence_residual(coin: CoinMatrix, lam: complex, values: np.ndarray) -> float:
    # max over interior sites of || lam*psi(x) - P psi(x+1) - Q psi(x-1) ||
    up = lam * values[1:-1, 0] - (coin.c11 * values[2:, 0] + coin.c12 * values[2:, 1])
    lo = lam * values[1:-1, 1] - (coin.c21 * values[:-2, 0] + coin.c22 * values[:-2, 1])
    return float(np.sqrt(np.abs(up) ** 2 + np.abs(lo) ** 2).max())


def kls_eigenfunction(sigma: int, tau: int, phi2: complex,
                      xmin: int, xmax: int) -> SpinorField:
    """Piecewise-geometric Hadamard-walk eigenfunction with uniform measure.

    For sign choices sigma, tau in {+1, -1} and a nonzero seed phi2, the
    field equals ``(tau*i*sgn(x))^|x|`` times a constant spinor on each
    half line (phi1*(1, -sigma*tau*i) to the right, phi2*(sigma*tau*i, 1)
    to the left, with phi1 = sigma*tau*i*phi2 at the origin).  It solves
    the eigenvalue problem at lambda = (sigma + tau*i)/sqrt(2); that is
    re-checked on the requested window before returning.
    """
    if sigma not in (1, -1) or tau not in (1, -1):
        raise ValueError("sigma and tau must be +1 or -1")
    if phi2 == 0:
        raise ZeroInputError("phi2 must be nonzero")
    if not xmin <= 0 <= xmax:
        raise ValueError(f"window [{xmin}, {xmax}] must contain the origin")
    phi2 = complex(phi2)
    phi1 = sigma * tau * 1j * phi2

    x = np.arange(xmin, xmax + 1)
    prefactor = np.where(
        x >= 0, (tau * 1j) ** x, (-tau * 1j) ** (-x)
    ).astype(np.complex128)
    values = np.empty((x.size, 2), dtype=np.complex128)
    values[x >= 1] = phi1 * np.array([1.0, -sigma * tau * 1j])
    values[x == 0] = [phi1, phi2]
    values[x <= -1] = phi2 * np.array([sigma * tau * 1j, 1.0])
    values *= prefactor[:, None]

    lam = (sigma + tau * 1j) / np.sqrt(2.0)
    if x.size >= 3:
        residual = _recurrence_residual(hadamard(), lam, values)
        if residual > 1e-12 * max(1.0, abs(phi2)):
            raise AssertionError(
                f"constructed field misses the eigenvalue relation by {residual:.3e}"
            )
    return SpinorField(xmin, values)
