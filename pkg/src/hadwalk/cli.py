"""Command-line front end.

Subcommands:

* ``evolve``    -- iterate the walk and emit per-step measure tables
* ``classify``  -- classify the stationary measure for (theta, phi)
* ``period``    -- periodicity verdict for a bounded-region angle
* ``spectrum``  -- spectral arcs and the dispersion table of a coin
* ``transfer``  -- print the transfer pair at an eigenvalue
* ``roots``     -- print the characteristic roots and their type
* ``verify``    -- run the full verification suite

Numbers are emitted with 17 significant digits (round-trip exact for
doubles); complex values appear as [re, im] pairs in JSON.  Exit codes:
0 ok, 1 verification failure, 2 usage error, 3 domain error.
"""

import argparse
import json
import re
import sys

import numpy as np

from . import verify as _verify_mod
from .classify import (
    Aperiodic,
    BoundedOscillatory,
    Exponential,
    FinitePeriod,
    QuadraticPolynomial,
    Uniform,
    UniformPeriodOne,
    classify,
    period_of,
    theta_region,
)
from .closed_form import char_roots, root_type
from .coin import (
    CoinMatrix,
    InitialVector,
    SpinorField,
    hadamard,
    identity_coin,
    measure_of,
    rotation_coin,
    validate_coin,
)
from .errors import DomainError
from .evolution import step, verify_stationary
from .spectrum import dispersion_table, spectrum_arcs
from .transfer import build_transfer

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2
EXIT_DOMAIN = 3

_PI_LITERAL = re.compile(
    r"^\s*(?P<sign>[+-])?\s*(?P<num>\d+(?:\.\d+)?)?\s*\*?\s*pi\s*(?:/\s*(?P<den>\d+))?\s*$",
    re.IGNORECASE,
)


def fmt(value: float) -> str:
    """CSV cell: 17 significant digits, '.' decimal separator."""
    return f"{float(value):.17g}"


def parse_complex(text: str) -> complex:
    """Literals like '1', '-i', '2i', '1+2i', '1.5e-3-0.5i'."""
    s = text.strip().replace(" ", "")
    if not s:
        raise argparse.ArgumentTypeError("empty complex literal")
    try:
        value = complex(s.replace("i", "j").replace("I", "j"))
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad complex literal {text!r}") from None
    if not (np.isfinite(value.real) and np.isfinite(value.imag)):
        raise argparse.ArgumentTypeError(f"non-finite complex literal {text!r}")
    return value


def parse_theta(text: str) -> float:
    """Angle in radians: a decimal, or a rational multiple of pi such as
    'pi/6', '3pi/4', '1.5*pi', '-pi/4'."""
    s = text.strip()
    m = _PI_LITERAL.match(s)
    if m:
        num = float(m.group("num")) if m.group("num") else 1.0
        den = int(m.group("den")) if m.group("den") else 1
        if den == 0:
            raise argparse.ArgumentTypeError(f"zero denominator in {text!r}")
        sign = -1.0 if m.group("sign") == "-" else 1.0
        return sign * num * np.pi / den
    try:
        return float(s)
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad angle literal {text!r}") from None


class CoinSpec:
    """Deferred coin construction so domain errors surface as exit 3."""

    def __init__(self, text: str):
        self.text = text.strip()
        s = self.text.lower()
        if s in ("hadamard", "identity"):
            self.kind = s
            self.args = ()
        elif s.startswith("rotation:"):
            self.kind = "rotation"
            self.args = (parse_theta(self.text.split(":", 1)[1]),)
        else:
            parts = self.text.split(",")
            if len(parts) != 4:
                raise argparse.ArgumentTypeError(
                    f"coin must be 'hadamard', 'identity', 'rotation:<angle>' "
                    f"or four comma-separated complex entries, got {text!r}"
                )
            self.kind = "literal"
            self.args = tuple(parse_complex(p) for p in parts)

    def build(self) -> CoinMatrix:
        if self.kind == "hadamard":
            return hadamard()
        if self.kind == "identity":
            return identity_coin()
        if self.kind == "rotation":
            return rotation_coin(self.args[0])
        return validate_coin(*self.args)


def parse_phi(text: str):
    parts = text.split(",")
    if len(parts) != 2:
        raise argparse.ArgumentTypeError(
            f"phi must be two comma-separated complex entries, got {text!r}"
        )
    return parse_complex(parts[0]), parse_complex(parts[1])


def parse_init(text: str):
    """Initial-field literals 'delta:<phi1>,<phi2>' or 'const:<phi1>,<phi2>'."""
    if ":" not in text:
        raise argparse.ArgumentTypeError(
            f"init must be 'delta:<c>,<c>' or 'const:<c>,<c>', got {text!r}"
        )
    kind, rest = text.split(":", 1)
    kind = kind.strip().lower()
    if kind not in ("delta", "const"):
        raise argparse.ArgumentTypeError(f"unknown init kind {kind!r}")
    return kind, parse_phi(rest)


def cpx(value: complex):
    return [float(np.real(value)), float(np.imag(value))]


def _flagged(flag: str, fn, *args, **kwargs):
    """Run fn, attributing any domain error to the offending flag."""
    try:
        return fn(*args, **kwargs)
    except DomainError as exc:
        raise DomainError(f"{flag}: {type(exc).__name__}: {exc}") from None


def _emit(text: str, out_path):
    if out_path:
        with open(out_path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _emit_json(obj, out_path):
    _emit(json.dumps(obj, indent=2) + "\n", out_path)


def cmd_evolve(args) -> int:
    coin = _flagged("--coin", args.coin.build)
    window, steps = args.window, args.steps
    if window < 1 or steps < 0 or window < steps:
        raise DomainError(
            f"--window must satisfy window >= steps >= 0, got {window}, {steps}"
        )
    kind, (p1, p2) = args.init
    n = 2 * window + 1
    values = np.zeros((n, 2), dtype=np.complex128)
    if kind == "delta":
        values[window] = (p1, p2)
    else:
        values[:] = (p1, p2)
    field = SpinorField(-window, values)

    rows = []
    for k in range(steps + 1):
        v = field.values
        mu_l = np.abs(v[:, 0]) ** 2
        mu_r = np.abs(v[:, 1]) ** 2
        for i, x in enumerate(field.sites()):
            rows.append((k, int(x), mu_l[i], mu_r[i], mu_l[i] + mu_r[i]))
        if k < steps:
            field = step(coin, field)

    if args.format == "csv":
        lines = ["step,x,muL2,muR2,mu"]
        lines += [f"{s},{x},{fmt(a)},{fmt(b)},{fmt(c)}" for s, x, a, b, c in rows]
        _emit("\n".join(lines) + "\n", args.out)
    else:
        _emit_json(
            {
                "columns": ["step", "x", "muL2", "muR2", "mu"],
                "rows": [[s, x, a, b, c] for s, x, a, b, c in rows],
            },
            args.out,
        )
    return EXIT_OK


def _period_obj(verdict):
    if isinstance(verdict, FinitePeriod):
        return {"kind": "finite", "m_min": verdict.m_min}
    if isinstance(verdict, UniformPeriodOne):
        return {"kind": "uniform_period_one", "m_min": 1}
    return {
        "kind": "aperiodic",
        "best_p": verdict.best_p,
        "best_q": verdict.best_q,
        "residual": verdict.residual,
        "note": "no rational xi/(2*pi) within denominator 10^6 and residual 1e-9",
    }


def _class_obj(result):
    if isinstance(result, QuadraticPolynomial):
        return "quadratic", {"a": result.a, "b": result.b, "c": result.c}
    if isinstance(result, Uniform):
        return "uniform", {"level": result.level}
    if isinstance(result, BoundedOscillatory):
        w = result.w
        return "bounded", {
            "xi": result.xi,
            "period": _period_obj(result.period),
            "w1": w.w1, "w2": cpx(w.w2), "w3": w.w3, "w4": cpx(w.w4),
            "w5": w.w5, "w6": w.w6,
        }
    return "exponential", {"r_plus": result.r_plus, "r_minus": result.r_minus}


def cmd_classify(args) -> int:
    phi = _flagged("--phi", InitialVector, *args.phi)
    result = _flagged("--theta", classify, args.theta, phi)
    tag, params = _class_obj(result)
    report = verify_stationary(hadamard(), np.exp(1j * args.theta), phi,
                               L=64, n_steps=10, tol=args.tol)
    _emit_json(
        {
            "theta": args.theta,
            "region": theta_region(args.theta),
            "class": tag,
            "parameters": params,
            "oracle": {
                "eigen_residual": report.max_eigen_residual,
                "stationarity_max_dev": report.max_measure_dev,
                "tol": args.tol,
                "passed": report.passed,
            },
        },
        args.out,
    )
    return EXIT_OK


def cmd_period(args) -> int:
    phi = _flagged("--phi", InitialVector, *args.phi)
    verdict = _flagged("--theta", period_of, args.theta, phi)
    _emit_json(
        {
            "theta": args.theta,
            "region": theta_region(args.theta),
            "period": _period_obj(verdict),
        },
        args.out,
    )
    return EXIT_OK


def cmd_spectrum(args) -> int:
    coin = _flagged("--coin", args.coin.build)
    arcs = spectrum_arcs(coin, args.grid)
    table = dispersion_table(coin, args.grid)
    if args.format == "csv":
        lines = [f"# arc,{fmt(lo)},{fmt(hi)}" for lo, hi in arcs]
        lines.append("k,arg_lambda1,arg_lambda2")
        lines += [f"{fmt(k)},{fmt(a1)},{fmt(a2)}" for k, a1, a2 in table]
        _emit("\n".join(lines) + "\n", args.out)
    else:
        _emit_json(
            {
                "arcs": [[lo, hi] for lo, hi in arcs],
                "dispersion": {
                    "columns": ["k", "arg_lambda1", "arg_lambda2"],
                    "rows": table.tolist(),
                },
            },
            args.out,
        )
    return EXIT_OK


def cmd_transfer(args) -> int:
    coin = _flagged("--coin", args.coin.build)
    pair = _flagged("--coin", build_transfer, coin, np.exp(1j * args.theta))
    _emit_json(
        {
            "theta": args.theta,
            "lambda": cpx(pair.lam),
            "t_plus": [[cpx(v) for v in row] for row in pair.t_plus],
            "t_minus": [[cpx(v) for v in row] for row in pair.t_minus],
        },
        args.out,
    )
    return EXIT_OK


def cmd_roots(args) -> int:
    coin = _flagged("--coin", args.coin.build)
    roots = _flagged("--coin", char_roots, coin, np.exp(1j * args.theta))
    kind = root_type(roots)
    _emit_json(
        {
            "theta": args.theta,
            "lambda": cpx(roots.lam),
            "h": cpx(roots.h),
            "lambda_plus": cpx(roots.lambda_plus),
            "lambda_minus": cpx(roots.lambda_minus),
            "gamma_plus": cpx(roots.gamma_plus),
            "gamma_minus": cpx(roots.gamma_minus),
            "discriminant": cpx(roots.discriminant),
            "is_double": roots.is_double,
            "type": kind.tag,
            "moduli": [float(kind.moduli[0]), float(kind.moduli[1])],
        },
        args.out,
    )
    return EXIT_OK


def cmd_verify(args) -> int:
    results = _verify_mod.run_all(
        seed=args.seed,
        theta_grid=args.theta_grid,
        phi_samples=args.phi_samples,
        tol=args.tol,
    )
    ok = all(r.passed for r in results)
    _emit_json(
        {
            "passed": ok,
            "seed": args.seed,
            "checks": [r.as_dict() for r in results],
        },
        args.out,
    )
    return EXIT_OK if ok else EXIT_CHECK_FAILED


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hadwalk",
        description="Stationary measures of two-state quantum walks via transfer matrices.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, coin=False, theta=False, phi=False, fmt_flag=False):
        if coin:
            p.add_argument("--coin", type=CoinSpec, default=CoinSpec("hadamard"),
                           help="hadamard | identity | rotation:<angle> | c11,c12,c21,c22")
        if theta:
            p.add_argument("--theta", type=parse_theta, required=True,
                           help="eigenvalue angle in radians ('pi/6' literals allowed)")
        if phi:
            p.add_argument("--phi", type=parse_phi, required=True,
                           help="seed spinor, e.g. '1,0' or '1,-i'")
        if fmt_flag:
            p.add_argument("--format", choices=("csv", "json"), default="csv")
        p.add_argument("--out", default=None, help="output path (default stdout)")

    p = sub.add_parser("evolve", help="iterate the walk and emit measures")
    add_common(p, coin=True, fmt_flag=True)
    p.add_argument("--init", type=parse_init, default=parse_init("delta:1,0"),
                   help="'delta:<c>,<c>' (point seed) or 'const:<c>,<c>'")
    p.add_argument("--steps", type=int, default=4)
    p.add_argument("--window", type=int, default=16)
    p.set_defaults(func=cmd_evolve)

    p = sub.add_parser("classify", help="classify a stationary measure")
    add_common(p, theta=True, phi=True)
    p.add_argument("--tol", type=float, default=1e-10,
                   help="stationarity oracle tolerance")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("period", help="periodicity verdict on the bounded region")
    add_common(p, theta=True, phi=True)
    p.set_defaults(func=cmd_period)

    p = sub.add_parser("spectrum", help="spectral arcs of a coin")
    add_common(p, coin=True, fmt_flag=True)
    p.add_argument("--grid", type=int, default=4096)
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("transfer", help="print the transfer pair")
    add_common(p, coin=True, theta=True)
    p.set_defaults(func=cmd_transfer)

    p = sub.add_parser("roots", help="print the characteristic roots")
    add_common(p, coin=True, theta=True)
    p.set_defaults(func=cmd_roots)

    p = sub.add_parser("verify", help="run the verification suite")
    p.add_argument("--theta-grid", type=int, default=360)
    p.add_argument("--phi-samples", type=int, default=5)
    p.add_argument("--tol", type=float, default=None,
                   help="override every check's primary tolerance")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
