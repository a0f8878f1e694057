"""Closed-form eigenfunctions and the characteristic-root machinery.

The spinor recurrence along an eigenfunction has a quadratic
characteristic polynomial per half line; its two roots decide everything
downstream (polynomial vs bounded vs exponential measures).  The closed
forms here are the explicit solutions: a degenerate (double-root) branch
with polynomial-times-geometric structure, and a generic branch that
interpolates the two geometric solutions through the first-step values.
"""

import warnings
from dataclasses import dataclass

import numpy as np

from .coin import CoinMatrix, InitialVector, SpinorField
from .errors import DegeneratePrefactorError, NotOnUnitCircleError, ZeroCornerEntryError
from .transfer import CORNER_TOL, UNIT_CIRCLE_TOL, boundary_values

DOUBLE_ROOT_TOL = 1e-12
MODULUS_TOL = 1e-10
CASE_DISPATCH_TOL = 1e-10
CASE_WARN_BAND = 1e-6
ROOT_RESIDUAL_TOL = 1e-12

TYPE1 = "type1"
TYPE2 = "type2"
TYPE3 = "type3"

__all__ = [
    "CharRoots",
    "RootType",
    "char_roots",
    "root_type",
    "eigenfunction_case",
    "closed_form_eigenfunction",
    "closed_form_field",
]


@dataclass(frozen=True)
class CharRoots:
    """Roots of x^2 + l*x + c22/c11 = 0 for the half-line recurrences.

    ``lambda_plus/minus`` govern the right half line, ``gamma_plus/minus``
    (the same roots rescaled by c11/c22) the left one.  ``h`` is
    lambda^2 + det(C); the discriminant is h^2 - 4*lambda^2*c11*c22.
    """

    lam: complex
    h: complex
    lambda_plus: complex
    lambda_minus: complex
    gamma_plus: complex
    gamma_minus: complex
    discriminant: complex
    is_double: bool


@dataclass(frozen=True)
class RootType:
    """Taxonomy tag plus the root moduli that justify it."""

    tag: str
    moduli: tuple


def _check_args(coin: CoinMatrix, lam: complex) -> None:
    if abs(coin.c11) <= CORNER_TOL or abs(coin.c22) <= CORNER_TOL:
        raise ZeroCornerEntryError("characteristic roots need c11 != 0 and c22 != 0")
    if abs(abs(lam) - 1.0) > UNIT_CIRCLE_TOL:
        raise NotOnUnitCircleError(f"|lambda| = {abs(lam)!r} is not 1")


def char_roots(coin: CoinMatrix, lam: complex) -> CharRoots:
    """Both half-line root pairs at the given eigenvalue.

    Uses the principal square root of the discriminant; any other
    consistent branch only swaps the plus/minus labels.
    """
    _check_args(coin, lam)
    c11, c22 = coin.c11, coin.c22
    h = lam * lam + coin.delta
    disc = h * h - 4 * lam * lam * c11 * c22
    sq = np.sqrt(complex(disc))
    lp = (h + sq) / (2 * c11 * lam)
    lm = (h - sq) / (2 * c11 * lam)
    gp = (h + sq) / (2 * c22 * lam)
    gm = (h - sq) / (2 * c22 * lam)

    ratio = c22 / c11
    ell = -(lam + coin.delta / lam) / c11
    for root in (lp, lm):
        residual = abs(root * root + ell * root + ratio)
        if residual > ROOT_RESIDUAL_TOL * max(1.0, abs(root) ** 2):
            raise ArithmeticError(f"characteristic root residual {residual:.3e}")
    if abs(lp * lm - ratio) > ROOT_RESIDUAL_TOL * max(1.0, abs(ratio)):
        raise ArithmeticError("root product deviates from c22/c11")

    return CharRoots(
        lam=complex(lam),
        h=complex(h),
        lambda_plus=complex(lp),
        lambda_minus=complex(lm),
        gamma_plus=complex(gp),
        gamma_minus=complex(gm),
        discriminant=complex(disc),
        is_double=bool(abs(disc) <= DOUBLE_ROOT_TOL),
    )


def root_type(roots: CharRoots) -> RootType:
    """Classify the root pair.

    Root coincidence is judged by the discriminant (the square root of a
    rounding-level discriminant already separates the roots by ~1e-8, so
    comparing the roots directly would misfire at exact double points).
    """
    moduli = (abs(roots.lambda_plus), abs(roots.lambda_minus))
    if roots.is_double:
        return RootType(TYPE1, moduli)
    if abs(moduli[0] - moduli[1]) <= MODULUS_TOL:
        return RootType(TYPE2, moduli)
    return RootType(TYPE3, moduli)


def _case_distance(coin: CoinMatrix, lam: complex) -> float:
    s = np.sqrt(complex(coin.c11 * coin.c12 * coin.c21 * coin.c22))
    lam2 = lam * lam
    return min(abs(lam2 - (coin.delta_tilde + 2 * s)),
               abs(lam2 - (coin.delta_tilde - 2 * s)))


def eigenfunction_case(coin: CoinMatrix, lam: complex) -> int:
    """1 for the double-root closed form, 2 for the generic one."""
    _check_args(coin, lam)
    return 1 if _case_distance(coin, lam) <= CASE_DISPATCH_TOL else 2


def _double_root_values(coin: CoinMatrix, lam: complex, phi: InitialVector,
                        x: np.ndarray) -> np.ndarray:
    c11, c12, c21, c22 = coin.c11, coin.c12, coin.c21, coin.c22
    delta, delta_t = coin.delta, coin.delta_tilde
    lam2 = lam * lam
    h = lam2 + delta
    if abs(h) <= 1e-14:
        raise DegeneratePrefactorError(
            f"lambda^2 + det(C) = {h!r} vanishes; double-root form undefined"
        )
    p1, p2 = phi.phi1, phi.phi2
    bracket_l = p1 * (1 + x) * lam2 - (p1 * delta_t + 2 * c12 * c22 * p2) * x + p1 * delta
    bracket_r = p2 * (1 - x) * lam2 + (p2 * delta_t + 2 * c11 * c21 * p1) * x + p2 * delta
    base_plus = h / (2 * c11 * lam)
    base_minus = h / (2 * c22 * lam)
    pref = np.where(x >= 0,
                    np.power(base_plus, np.maximum(x, 0)),
                    np.power(base_minus, np.maximum(-x, 0)))
    out = np.empty((x.size, 2), dtype=np.complex128)
    out[:, 0] = pref * bracket_l / h
    out[:, 1] = pref * bracket_r / h
    return out


def _distinct_root_values(coin: CoinMatrix, lam: complex, phi: InitialVector,
                          x: np.ndarray) -> np.ndarray:
    roots = char_roots(coin, lam)
    lp, lm = roots.lambda_plus, roots.lambda_minus
    gp, gm = roots.gamma_plus, roots.gamma_minus
    psi_plus, psi_minus = boundary_values(coin, lam, phi)
    seed = phi.as_array()

    out = np.empty((x.size, 2), dtype=np.complex128)
    pos = x >= 1
    neg = x <= -1
    if np.any(pos):
        xp = x[pos]
        lp_x = np.power(lp, xp)[:, None]
        lm_x = np.power(lm, xp)[:, None]
        out[pos] = (lp_x * (psi_plus - lm * seed) - lm_x * (psi_plus - lp * seed)) / (lp - lm)
    if np.any(neg):
        xn = -x[neg]
        gp_x = np.power(gp, xn)[:, None]
        gm_x = np.power(gm, xn)[:, None]
        out[neg] = (gp_x * (psi_minus - gm * seed) - gm_x * (psi_minus - gp * seed)) / (gp - gm)
    out[x == 0] = seed
    return out


def _values(coin: CoinMatrix, lam: complex, phi: InitialVector,
            x: np.ndarray) -> np.ndarray:
    d = _case_distance(coin, lam)
    if d <= CASE_DISPATCH_TOL:
        return _double_root_values(coin, lam, phi, x)
    if d <= CASE_WARN_BAND:
        # Near the dispatch boundary the generic branch is ill-conditioned;
        # compare against the degenerate branch and flag disagreement.
        generic = _distinct_root_values(coin, lam, phi, x)
        degenerate = _double_root_values(coin, lam, phi, x)
        gap = np.abs(generic - degenerate) / np.maximum(1.0, np.abs(generic))
        if gap.max() > 1e-6:
            warnings.warn(
                f"eigenvalue within {d:.2e} of the double-root set: closed-form "
                f"branches diverge by {gap.max():.2e}",
                RuntimeWarning,
                stacklevel=3,
            )
        return generic
    return _distinct_root_values(coin, lam, phi, x)


def closed_form_eigenfunction(coin: CoinMatrix, lam: complex, phi: InitialVector,
                              x: int) -> np.ndarray:
    """Spinor at a single site, straight from the closed forms."""
    _check_args(coin, lam)
    return _values(coin, lam, phi, np.array([int(x)]))[0]


def closed_form_field(coin: CoinMatrix, lam: complex, phi: InitialVector,
                      xmin: int, xmax: int) -> SpinorField:
    """Closed-form eigenfunction evaluated on a whole window."""
    _check_args(coin, lam)
    if not xmin <= 0 <= xmax:
        raise ValueError(f"window [{xmin}, {xmax}] must contain the origin")
    x = np.arange(xmin, xmax + 1)
    return SpinorField(xmin, _values(coin, lam, phi, x))
