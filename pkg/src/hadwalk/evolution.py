"""Walk dynamics and the brute-force stationarity oracle.

One step moves the upper spinor component one site left and the lower one
site right, mixed through the coin.  The window shrinks by one site per
edge instead of zero-padding, so every reported amplitude is exact.
The stationarity verifier below is the master oracle of the package: it
checks candidate eigenfunctions directly against the dynamics without
using any closed-form result.
"""

from dataclasses import dataclass

import numpy as np

from . import _kernels
from .coin import CoinMatrix, InitialVector, SpinorField, measure_of
from .errors import NotOnUnitCircleError, WindowTooSmallError

UNIT_CIRCLE_TOL = 1e-12

__all__ = [
    "step",
    "eigen_residual",
    "StationarityReport",
    "stationarity_report",
    "verify_stationary",
]


def step(coin: CoinMatrix, field: SpinorField) -> SpinorField:
    """Apply one walk step; the result lives on [xmin+1, xmax-1].

    Sites outside the input window are never read.  Raises
    :class:`WindowTooSmallError` when fewer than three sites are present
    or when the shrunken window would lose the origin.
    """
    if len(field) < 3:
        raise WindowTooSmallError(
            f"need at least 3 sites to step, window has {len(field)}"
        )
    if not (field.xmin + 1 <= 0 <= field.xmax - 1):
        raise WindowTooSmallError("stepping would shrink the window past the origin")
    new_values = _kernels.evolve_once(coin.c11, coin.c12, coin.c21, coin.c22,
                                      field.values)
    return SpinorField(field.xmin + 1, new_values)


def eigen_residual(coin: CoinMatrix, lam: complex, field: SpinorField) -> np.ndarray:
    """Per-site deviation of one step from multiplication by ``lam``.

    Returned on the interior window [xmin+1, xmax-1], scaled by
    ``max(1, |spinor|)`` so exponentially large fields are judged in
    relative terms.
    """
    stepped = step(coin, field)
    expected = lam * field.values[1:-1]
    diff = np.linalg.norm(stepped.values - expected, axis=1)
    scale = np.maximum(1.0, np.linalg.norm(field.values[1:-1], axis=1))
    return diff / scale


@dataclass(frozen=True)
class StationarityReport:
    """Outcome of iterating the walk against a candidate eigenfunction.

    Deviations are scaled by ``max(1, mu)`` site-wise, i.e. absolute for
    small measures and relative once the measure exceeds one.
    """

    lam: complex
    n_steps: int
    tol: float
    max_eigen_residual: float
    max_measure_dev: float
    per_step_dev: tuple
    passed: bool


def stationarity_report(coin: CoinMatrix, lam: complex, field: SpinorField,
                        n_steps: int, tol: float) -> StationarityReport:
    """Iterate ``n_steps`` walk steps and compare measures to the start.

    The comparison at step k is restricted to the surviving interior
    window; the field must be wide enough to keep at least three sites
    after the final step.
    """
    if len(field) < 2 * n_steps + 3:
        raise WindowTooSmallError(
            f"window of {len(field)} sites cannot survive {n_steps} steps"
        )
    residual = float(eigen_residual(coin, lam, field).max())

    mu0 = measure_of(field).values
    current = field
    per_step = []
    for k in range(1, n_steps + 1):
        current = step(coin, current)
        mu_k = measure_of(current).values
        ref = mu0[k:len(mu0) - k]
        dev = np.abs(mu_k - ref) / np.maximum(1.0, ref)
        per_step.append(float(dev.max()))
    max_dev = max(per_step) if per_step else 0.0
    return StationarityReport(
        lam=complex(lam),
        n_steps=n_steps,
        tol=tol,
        max_eigen_residual=residual,
        max_measure_dev=max_dev,
        per_step_dev=tuple(per_step),
        passed=max_dev <= tol,
    )


def verify_stationary(coin: CoinMatrix, lam: complex, phi: InitialVector,
                      L: int = 64, n_steps: int = 10,
                      tol: float = 1e-10) -> StationarityReport:
    """Build the transfer-iterated eigenfunction on [-L, L] and stress it.

    This is the independent end-to-end check: the field comes from the
    transfer recurrence, the verdict from the raw dynamics.
    """
    if abs(abs(lam) - 1.0) > UNIT_CIRCLE_TOL:
        raise NotOnUnitCircleError(f"|lambda| = {abs(lam)!r} is not 1 within {UNIT_CIRCLE_TOL}")
    if L <= n_steps + 2:
        raise WindowTooSmallError(f"need L > n_steps + 2, got L={L}, n_steps={n_steps}")
    from .transfer import transfer_eigenfunction

    field = transfer_eigenfunction(coin, lam, phi, -L, L)
    return stationarity_report(coin, lam, field, n_steps, tol)
