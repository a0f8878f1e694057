"""Hot inner loops: site-to-site transfer iteration and walk stepping.

Both kernels are sequential recurrences over lattice sites, so they are
implemented twice: a numba ``@njit`` version and a pure-numpy fallback.
The fallback is selected automatically when numba is unavailable, or
explicitly by setting the environment variable ``HADWALK_PURE_NUMPY=1``
before import.  ``benchmarks/bench_backends.py`` compares the two.
"""

import os

import numpy as np

__all__ = [
    "BACKEND",
    "transfer_sequence",
    "transfer_sequence_numpy",
    "evolve_once",
    "evolve_once_numpy",
]


def transfer_sequence_numpy(t_fwd: np.ndarray, t_bwd: np.ndarray,
                            phi: np.ndarray, n_neg: int, n_pos: int) -> np.ndarray:
    """Spinors on [-n_neg, n_pos] generated from phi at the origin.

    Forward sites apply ``t_fwd`` repeatedly, backward sites ``t_bwd``;
    row ``n_neg + x`` holds the spinor at lattice site ``x``.
    """
    out = np.empty((n_neg + n_pos + 1, 2), dtype=np.complex128)
    out[n_neg] = phi
    v = phi
    for j in range(1, n_pos + 1):
        v = t_fwd @ v
        out[n_neg + j] = v
    v = phi
    for j in range(1, n_neg + 1):
        v = t_bwd @ v
        out[n_neg - j] = v
    return out


def evolve_once_numpy(c11: complex, c12: complex, c21: complex, c22: complex,
                      values: np.ndarray) -> np.ndarray:
    """One walk step on a dense window; output loses one site per edge.

    Row i of the result is the new spinor at the site of input row i+1:
    the upper component is pulled from the right neighbour through the
    coin's top row, the lower component from the left neighbour through
    the bottom row.
    """
    out = np.empty((values.shape[0] - 2, 2), dtype=np.complex128)
    out[:, 0] = c11 * values[2:, 0] + c12 * values[2:, 1]
    out[:, 1] = c21 * values[:-2, 0] + c22 * values[:-2, 1]
    return out


def _numba_kernels():
    from numba import njit

    @njit(cache=True)
    def transfer_sequence_nb(t_fwd, t_bwd, phi, n_neg, n_pos):
        out = np.empty((n_neg + n_pos + 1, 2), dtype=np.complex128)
        out[n_neg, 0] = phi[0]
        out[n_neg, 1] = phi[1]
        a = phi[0]
        b = phi[1]
        for j in range(1, n_pos + 1):
            na = t_fwd[0, 0] * a + t_fwd[0, 1] * b
            nb = t_fwd[1, 0] * a + t_fwd[1, 1] * b
            a, b = na, nb
            out[n_neg + j, 0] = a
            out[n_neg + j, 1] = b
        a = phi[0]
        b = phi[1]
        for j in range(1, n_neg + 1):
            na = t_bwd[0, 0] * a + t_bwd[0, 1] * b
            nb = t_bwd[1, 0] * a + t_bwd[1, 1] * b
            a, b = na, nb
            out[n_neg - j, 0] = a
            out[n_neg - j, 1] = b
        return out

    @njit(cache=True)
    def evolve_once_nb(c11, c12, c21, c22, values):
        n = values.shape[0] - 2
        out = np.empty((n, 2), dtype=np.complex128)
        for i in range(n):
            out[i, 0] = c11 * values[i + 2, 0] + c12 * values[i + 2, 1]
            out[i, 1] = c21 * values[i, 0] + c22 * values[i, 1]
        return out

    return transfer_sequence_nb, evolve_once_nb


_force_numpy = os.environ.get("HADWALK_PURE_NUMPY", "").lower() in ("1", "true", "yes")

if not _force_numpy:
    try:
        transfer_sequence, evolve_once = _numba_kernels()
        BACKEND = "numba"
    except ImportError:
        transfer_sequence, evolve_once = transfer_sequence_numpy, evolve_once_numpy
        BACKEND = "numpy"
else:
    transfer_sequence, evolve_once = transfer_sequence_numpy, evolve_once_numpy
    BACKEND = "numpy"
