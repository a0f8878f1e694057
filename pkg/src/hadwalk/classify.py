"""Classification of Hadamard-walk stationary measures by eigenvalue angle.

The unit circle of eigenvalue arguments splits into three regions:

* K1, four isolated angles where the characteristic roots collide -- the
  measures are quadratic polynomials (or constant, for seeds on an
  explicit uniform set);
* K2, the arcs where both roots stay on the unit circle -- the measures
  are bounded and oscillate with a fixed angle xi per site, periodic
  exactly when xi is a rational multiple of 2*pi;
* K3, the arcs where the root moduli split -- the measures grow
  exponentially in both directions.

Every verdict produced here is cross-checked against the transfer
iteration before being returned.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

import numpy as np

from .coin import InitialVector, hadamard, measure_of
from .closed_form import char_roots
from .errors import (
    ClassificationError,
    DegenerateCoinError,
    DegenerateThetaError,
    NotK1Error,
    NotK2Error,
    NotK3Error,
    OnK1Error,
)
from .transfer import MAX_SITE, boundary_values, transfer_eigenfunction

TWO_PI = 2.0 * np.pi
K1_POINTS = (np.pi / 4, 3 * np.pi / 4, 5 * np.pi / 4, 7 * np.pi / 4)
K1_TOL = 1e-12

UNIFORM_COEFF_TOL = 1e-12
MAX_DENOMINATOR = 10 ** 6
RATIONAL_RESIDUAL_TOL = 1e-9
PERIOD_CONFIRM_TOL = 1e-10
ORACLE_TOL = 1e-8

K1, K2, K3 = "K1", "K2", "K3"

__all__ = [
    "theta_region",
    "double_root_eigenvalues",
    "z_components",
    "lambda_moduli",
    "qp_coefficients",
    "uniform_condition",
    "xi_angle",
    "WValues",
    "w_values",
    "case2_measure",
    "FinitePeriod",
    "Aperiodic",
    "UniformPeriodOne",
    "period_of",
    "exp_rates",
    "QuadraticPolynomial",
    "Uniform",
    "BoundedOscillatory",
    "Exponential",
    "StationaryClass",
    "classify",
]


def _reduce(theta: float) -> float:
    t = float(theta) % TWO_PI
    # values a hair below 2*pi are the same angle as 0
    if TWO_PI - t < K1_TOL:
        t = 0.0
    return t


def theta_region(theta: float) -> str:
    """K1 / K2 / K3 membership of the eigenvalue angle.

    K1 points match within 1e-12; elsewhere the sign of cos(2*theta)
    decides (positive on K2, negative on K3), which reproduces the
    half-open interval boundaries exactly.
    """
    t = _reduce(theta)
    if any(abs(t - p) <= K1_TOL for p in K1_POINTS):
        return K1
    return K2 if np.cos(2.0 * t) > 0.0 else K3


def double_root_eigenvalues(zeta: float) -> np.ndarray:
    """The four unit-circle eigenvalues with colliding roots, for the
    rotation coin with angle ``zeta``.

    They sit at +-eta/2 and pi -+ eta/2 where cos(eta) = -cos(2*zeta)
    and sin(eta) = |sin(2*zeta)|.
    """
    c, s = np.cos(zeta), np.sin(zeta)
    if abs(c) < 1e-12 or abs(s) < 1e-12:
        raise DegenerateCoinError(
            f"rotation angle {zeta!r} gives a diagonal or antidiagonal coin"
        )
    eta = abs(np.arctan2(2 * c * s, s * s - c * c))
    half = eta / 2.0
    args = np.array([half, np.pi - half, np.pi + half, TWO_PI - half])
    return np.exp(1j * args)


def z_components(theta: float):
    """Real and imaginary parts of the root cross-term conj(f)*g, where
    f = lambda^2 - 1 and g is the square root of lambda^4 + 1 on the
    branch with a fixed sign per sub-arc.

    Purely imaginary on K2, purely real on K3; the nonzero component is
    +-2*sin(theta)*sqrt(+-2*cos(2*theta)) with the sign switching at the
    midpoints of each arc.
    """
    t = _reduce(theta)
    region = theta_region(t)
    if region == K1:
        raise OnK1Error("cross-term is undefined on the double-root set")
    c2 = np.cos(2.0 * t)
    s1 = np.sin(t)
    if region == K2:
        mag = 2.0 * s1 * np.sqrt(2.0 * c2)
        if t < np.pi / 4 or (3 * np.pi / 4 < t <= np.pi):
            return 0.0, -mag + 0.0
        return 0.0, mag + 0.0
    mag = 2.0 * s1 * np.sqrt(-2.0 * c2)
    if (np.pi / 4 < t < np.pi / 2) or (3 * np.pi / 2 <= t < 7 * np.pi / 4):
        return mag + 0.0, 0.0
    return -mag + 0.0, 0.0


def lambda_moduli(theta: float):
    """Squared moduli of the two right-half-line roots.

    Both are 1 on K1 and K2; on K3 they split into reciprocal values
    1 - 2*cos(2*theta) +- 2*sin(theta)*sqrt(-2*cos(2*theta)) with the
    labelling switching at theta = pi/2 and 3*pi/2.
    """
    t = _reduce(theta)
    region = theta_region(t)
    if region in (K1, K2):
        return 1.0, 1.0
    c2 = np.cos(2.0 * t)
    base = 1.0 - 2.0 * c2
    cross = 2.0 * np.sin(t) * np.sqrt(-2.0 * c2)
    if (np.pi / 4 < t < np.pi / 2) or (3 * np.pi / 2 <= t < 7 * np.pi / 4):
        return base + cross, base - cross
    return base - cross, base + cross


def _k1_sign(t: float) -> float:
    # sin(2*theta) is exactly +-1 on the double-root set
    if min(abs(t - K1_POINTS[0]), abs(t - K1_POINTS[2])) <= K1_TOL:
        return 1.0
    return -1.0


def qp_coefficients(phi: InitialVector, theta: float):
    """Coefficients (a, b, c) of the measure a*x^2 + b*x + c on the
    double-root set.

    a = c - 2*sin(2*theta)*Im(phi1*conj(phi2)) with sin(2*theta) snapped
    to its exact value +-1, so exactly-uniform seeds give a = 0.0.
    """
    t = _reduce(theta)
    if theta_region(t) != K1:
        raise NotK1Error(f"theta = {theta!r} is not a double-root angle")
    p1, p2 = phi.phi1, phi.phi2
    cross = p1 * np.conj(p2)
    c = abs(p1) ** 2 + abs(p2) ** 2
    a = c - 2.0 * _k1_sign(t) * cross.imag
    b = abs(p1) ** 2 - abs(p2) ** 2 - 2.0 * cross.real
    return max(a, 0.0), b, c


def uniform_condition(phi: InitialVector, theta: float) -> bool:
    """Whether the seed lies on the uniform-measure set for this
    double-root angle: equal moduli and argument difference pi/2
    (at pi/4, 5*pi/4) or 3*pi/2 (at 3*pi/4, 7*pi/4), mod 2*pi.
    """
    t = _reduce(theta)
    if theta_region(t) != K1:
        raise NotK1Error(f"theta = {theta!r} is not a double-root angle")
    m1, m2 = abs(phi.phi1), abs(phi.phi2)
    if abs(m1 - m2) > 1e-10 * max(m1, m2):
        return False
    target = _k1_sign(t) * np.pi / 2.0
    diff = np.angle(phi.phi1 * np.conj(phi.phi2))
    dist = abs((diff - target + np.pi) % TWO_PI - np.pi)
    return bool(dist <= 1e-10)


def xi_angle(theta: float) -> float:
    """Per-site oscillation angle of the bounded measures, in (0, 2*pi).

    Defined through cos(xi1) = 1 - 2*cos(2*theta) and
    sin(xi1) = -2*sqrt(2*cos(2*theta))*sin(theta); angles on the second
    K2 sweep (past pi) use the conjugate angle 2*pi - xi1.
    """
    t = _reduce(theta)
    if theta_region(t) != K2:
        raise NotK2Error(f"theta = {theta!r} is not in the bounded region")
    if min(t, abs(t - np.pi)) <= K1_TOL:
        raise DegenerateThetaError(
            "theta in {0, pi}: oscillation vanishes identically (uniform measure)"
        )
    c2 = np.cos(2.0 * t)
    xi1 = np.arctan2(-2.0 * np.sqrt(2.0 * c2) * np.sin(t), 1.0 - 2.0 * c2) % TWO_PI
    if t < np.pi / 4 or (3 * np.pi / 4 < t <= np.pi):
        return float(xi1)
    return float(TWO_PI - xi1)


@dataclass(frozen=True)
class WValues:
    """First-step interpolation residuals and the derived quadratics.

    h1..h4 live on the right half line (differences between the site-1
    spinor and each root times the seed), k1..k4 on the left.  w1/w3 are
    the total squared sizes, w2/w4 the oscillating cross terms, w5/w6 the
    coefficients of the growing/decaying exponentials to the right and
    w5_left/w6_left the same to the left.  ``cross`` is
    lambda+ * conj(lambda-); ``pref`` is 1/|lambda+ - lambda-|^2.
    """

    h1: complex
    h2: complex
    h3: complex
    h4: complex
    k1: complex
    k2: complex
    k3: complex
    k4: complex
    w1: float
    w2: complex
    w3: float
    w4: complex
    w5: float
    w6: float
    w5_left: float
    w6_left: float
    r_plus: float
    r_minus: float
    cross: complex
    cross_left: complex
    pref: float
    pref_left: float
    level: float


def w_values(phi: InitialVector, theta: float) -> WValues:
    """All first-step interpolation data at lambda = e^{i*theta}.

    Requires distinct roots (theta outside the double-root set).  The
    plus/minus labelling follows the principal square root of the
    characteristic discriminant.
    """
    t = _reduce(theta)
    if theta_region(t) == K1:
        raise OnK1Error("interpolation residuals need distinct roots")
    coin = hadamard()
    lam = np.exp(1j * t)
    roots = char_roots(coin, lam)
    lp, lm = roots.lambda_plus, roots.lambda_minus
    gp, gm = roots.gamma_plus, roots.gamma_minus
    psi_plus, psi_minus = boundary_values(coin, lam, phi)
    p1, p2 = phi.phi1, phi.phi2

    h1 = psi_plus[0] - lm * p1
    h2 = psi_plus[0] - lp * p1
    h3 = psi_plus[1] - lm * p2
    h4 = psi_plus[1] - lp * p2
    k1 = psi_minus[0] - gm * p1
    k2 = psi_minus[0] - gp * p1
    k3 = psi_minus[1] - gm * p2
    k4 = psi_minus[1] - gp * p2

    w1 = abs(h1) ** 2 + abs(h2) ** 2 + abs(h3) ** 2 + abs(h4) ** 2
    w2 = h1 * np.conj(h2) + h3 * np.conj(h4)
    w3 = abs(k1) ** 2 + abs(k2) ** 2 + abs(k3) ** 2 + abs(k4) ** 2
    w4 = k1 * np.conj(k2) + k3 * np.conj(k4)

    return WValues(
        h1=h1, h2=h2, h3=h3, h4=h4,
        k1=k1, k2=k2, k3=k3, k4=k4,
        w1=float(w1), w2=complex(w2), w3=float(w3), w4=complex(w4),
        w5=abs(h1) ** 2 + abs(h3) ** 2,
        w6=abs(h2) ** 2 + abs(h4) ** 2,
        w5_left=abs(k1) ** 2 + abs(k3) ** 2,
        w6_left=abs(k2) ** 2 + abs(k4) ** 2,
        r_plus=abs(lp) ** 2,
        r_minus=abs(lm) ** 2,
        cross=lp * np.conj(lm),
        cross_left=gp * np.conj(gm),
        pref=1.0 / abs(lp - lm) ** 2,
        pref_left=1.0 / abs(gp - gm) ** 2,
        level=phi.norm_sq,
    )


def case2_measure(w: WValues, x) -> np.ndarray:
    """Measure reconstructed from the interpolation data at sites ``x``.

    Valid off the double-root set; covers both bounded and exponential
    regimes (on K2 the exponential factors are 1, on K3 the cross factor
    is 1).
    """
    x = np.atleast_1d(np.asarray(x, dtype=np.int64))
    out = np.empty(x.shape, dtype=np.float64)
    pos = x >= 1
    neg = x <= -1
    if np.any(pos):
        xp = x[pos].astype(np.float64)
        grow = np.power(w.r_plus, xp) * w.w5 + np.power(w.r_minus, xp) * w.w6
        osc = 2.0 * (np.power(w.cross, x[pos]) * w.w2).real
        out[pos] = w.pref * (grow - osc)
    if np.any(neg):
        xn = (-x[neg]).astype(np.float64)
        grow = np.power(w.r_plus, xn) * w.w5_left + np.power(w.r_minus, xn) * w.w6_left
        osc = 2.0 * (np.power(w.cross_left, -x[neg]) * w.w4).real
        out[neg] = w.pref_left * (grow - osc)
    out[x == 0] = w.level
    return out


@dataclass(frozen=True)
class FinitePeriod:
    """Measure repeats every m_min sites and for no smaller step."""

    m_min: int


@dataclass(frozen=True)
class Aperiodic:
    """No period found under the rational-detection policy.

    Carries the best rational approximant to xi/(2*pi) with denominator
    at most 10^6 and its residual.  This verdict is a numerical policy,
    not a theorem: a rational ratio beyond the detection bound would be
    reported here too.
    """

    best_p: int
    best_q: int
    residual: float


@dataclass(frozen=True)
class UniformPeriodOne:
    """The oscillating part vanishes; the measure is constant."""


PeriodVerdict = Union[FinitePeriod, Aperiodic, UniformPeriodOne]


def _confirm_period(theta: float, phi: InitialVector, m: int) -> bool:
    scale = max(1.0, phi.norm_sq)
    hi = min(4 * m, MAX_SITE - 1)
    if hi <= m:
        return False
    coin = hadamard()
    lam = np.exp(1j * _reduce(theta))
    mu = measure_of(transfer_eigenfunction(coin, lam, phi, 0, hi)).values
    dev = np.abs(mu[m:] - mu[:-m]).max()
    return dev <= PERIOD_CONFIRM_TOL * scale


def period_of(theta: float, phi: InitialVector) -> PeriodVerdict:
    """Periodicity verdict for a bounded-region measure.

    Constant measures (vanishing cross terms, always the case at theta
    in {0, pi}) report period one.  Otherwise the measure repeats after
    m sites iff m*xi is a multiple of 2*pi, so the verdict reduces to
    rational detection of xi/(2*pi): continued-fraction approximation
    with denominator bound 10^6 and residual below 1e-9, with the
    candidate period confirmed against the transfer-iterated measure
    over four periods.
    """
    t = _reduce(theta)
    if theta_region(t) != K2:
        raise NotK2Error(f"theta = {theta!r} is not in the bounded region")
    if min(t, abs(t - np.pi)) <= K1_TOL:
        return UniformPeriodOne()
    w = w_values(phi, t)
    scale = max(1.0, phi.norm_sq)
    if abs(w.w2) <= UNIFORM_COEFF_TOL * scale and abs(w.w4) <= UNIFORM_COEFF_TOL * scale:
        return UniformPeriodOne()
    xi = xi_angle(t)
    frac = Fraction(xi / TWO_PI).limit_denominator(MAX_DENOMINATOR)
    residual = abs(xi / TWO_PI - float(frac))
    p, q = frac.numerator, frac.denominator
    if residual < RATIONAL_RESIDUAL_TOL and _confirm_period(t, phi, q):
        return FinitePeriod(q)
    return Aperiodic(best_p=p, best_q=q, residual=float(residual))


def exp_rates(theta: float):
    """Dominant per-site growth factors toward +inf and -inf.

    The left half line mirrors the right one (its roots are the
    negatives of the right-hand roots), so both directions share the
    dominant factor max(|root|^2).
    """
    t = _reduce(theta)
    if theta_region(t) != K3:
        raise NotK3Error(f"theta = {theta!r} is not in the exponential region")
    m_plus, m_minus = lambda_moduli(t)
    dominant = max(m_plus, m_minus)
    return dominant, dominant


@dataclass(frozen=True)
class QuadraticPolynomial:
    """Measure a*x^2 + b*x + c with a > 0."""

    a: float
    b: float
    c: float


@dataclass(frozen=True)
class Uniform:
    """Constant measure."""

    level: float


@dataclass(frozen=True)
class BoundedOscillatory:
    """Bounded measure oscillating with angle xi per site."""

    xi: float
    w: WValues
    period: PeriodVerdict


@dataclass(frozen=True)
class Exponential:
    """Exponentially growing measure; factors per site toward +-inf."""

    r_plus: float
    r_minus: float


StationaryClass = Union[QuadraticPolynomial, Uniform, BoundedOscillatory, Exponential]


def _oracle_check(theta: float, phi: InitialVector, predict) -> None:
    coin = hadamard()
    lam = np.exp(1j * _reduce(theta))
    field = transfer_eigenfunction(coin, lam, phi, -40, 40)
    mu = measure_of(field).values
    x = field.sites()
    dev = np.abs(predict(x) - mu) / np.maximum(1.0, mu)
    worst = float(dev.max())
    if worst > ORACLE_TOL:
        raise ClassificationError(
            f"classified shape disagrees with the iterated measure by {worst:.3e} "
            f"at theta = {theta!r}"
        )


def classify(theta: float, phi: InitialVector) -> StationaryClass:
    """Full classification of the stationary measure seeded by ``phi``
    at eigenvalue angle ``theta``.

    Dispatches on the region of theta, then cross-validates the implied
    measure shape against the transfer iteration on [-40, 40] (relative
    tolerance 1e-8 where the measure exceeds one) before returning.
    """
    t = _reduce(theta)
    region = theta_region(t)
    if region == K1:
        a, b, c = qp_coefficients(phi, t)
        if a <= UNIFORM_COEFF_TOL * c and abs(b) <= UNIFORM_COEFF_TOL * c:
            result = Uniform(level=c)
            _oracle_check(t, phi, lambda x: np.full(x.shape, c))
            return result
        if a <= UNIFORM_COEFF_TOL * c and abs(b) > 1e-5 * c:
            raise ClassificationError(
                f"degenerate quadratic with linear term (a={a!r}, b={b!r}) "
                "should be impossible for the Hadamard walk"
            )
        result = QuadraticPolynomial(a=a, b=b, c=c)
        _oracle_check(t, phi, lambda x: a * x.astype(float) ** 2 + b * x + c)
        return result
    if region == K2:
        w = w_values(phi, t)
        scale = max(1.0, phi.norm_sq)
        _oracle_check(t, phi, lambda x: case2_measure(w, x))
        if abs(w.w2) <= UNIFORM_COEFF_TOL * scale and abs(w.w4) <= UNIFORM_COEFF_TOL * scale:
            return Uniform(level=phi.norm_sq)
        return BoundedOscillatory(xi=xi_angle(t), w=w, period=period_of(t, phi))
    w = w_values(phi, t)
    _oracle_check(t, phi, lambda x: case2_measure(w, x))
    r_plus, r_minus = exp_rates(t)
    return Exponential(r_plus=r_plus, r_minus=r_minus)
