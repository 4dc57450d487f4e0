"""Command-line front end.

Every subcommand writes one artifact (CSV with a header row, or JSON with
``"schema": 1``) to ``--output`` or stdout and prints a one-line summary
(to stderr when the artifact goes to stdout). Exit status: 0 success,
1 usage error, 2 numerical failure.
"""

from __future__ import annotations

import argparse
import io
import math
import os
import sys
from dataclasses import dataclass, field

from . import glweights, spectra, szego, toeplitz
from .errors import ConvergenceError, DomainError
from .specfun import QuadratureSpec

TOL_ENV = "FRACTOEPLITZ_TOL"
SCHEMA = 1


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _alpha(text: str) -> float:
    try:
        return glweights.check_alpha(float(text))
    except (ValueError, DomainError) as exc:
        raise argparse.ArgumentTypeError(f"invalid --alpha {text!r}: alpha must lie in (1, 2]") from exc


def _beta(text: str) -> float:
    value = float(text)
    if not -1.0 <= value <= 1.0:
        raise argparse.ArgumentTypeError(f"invalid --beta {text!r}: beta must lie in [-1, 1]")
    return value


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}")
    return value


def _nonneg_int(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {text!r}")
    return value


def _positive_float(text: str) -> float:
    value = float(text)
    if not (value > 0.0 and math.isfinite(value)):
        raise argparse.ArgumentTypeError(f"expected a positive number, got {text!r}")
    return value


def _int_list(text: str) -> list[int]:
    try:
        values = [int(part) for part in text.split(",") if part.strip()]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from exc
    if not values or any(v < 1 for v in values) or any(b <= a for a, b in zip(values, values[1:])):
        raise argparse.ArgumentTypeError(f"expected ascending positive integers, got {text!r}")
    return values


@dataclass
class RunConfig:
    command: str
    params: dict = field(default_factory=dict)
    output_path: str | None = None
    format: str = "csv"
    tol: float | None = None

    def quadrature(self) -> QuadratureSpec | None:
        if self.tol is None:
            return None
        return QuadratureSpec(abs_tol=self.tol, rel_tol=self.tol)


# ---------------------------------------------------------------------------
# deterministic serialization


def fmt(x: float) -> str:
    return format(x, ".17g")


def to_json(obj) -> str:
    """JSON with floats at 17 significant digits; NaN/Inf rejected."""
    if isinstance(obj, bool) or obj is None:
        return "true" if obj is True else "false" if obj is False else "null"
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, float):
        if not math.isfinite(obj):
            raise ValueError(f"non-finite value {obj!r} cannot be written as JSON")
        return fmt(obj)
    if isinstance(obj, str):
        import json

        return json.dumps(obj)
    if isinstance(obj, dict):
        return "{" + ", ".join(f"{to_json(str(k))}: {to_json(v)}" for k, v in obj.items()) + "}"
    if isinstance(obj, (list, tuple)):
        return "[" + ", ".join(to_json(v) for v in obj) + "]"
    if hasattr(obj, "item"):
        return to_json(obj.item())
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def csv_text(header: list[str], rows) -> str:
    out = io.StringIO()
    out.write(",".join(header) + "\n")
    for row in rows:
        out.write(",".join(fmt(v) if isinstance(v, float) else str(v) for v in row) + "\n")
    return out.getvalue()


# ---------------------------------------------------------------------------
# subcommands; each returns (artifact text, summary line)


def _params(args, n=None) -> toeplitz.StableParams:
    return toeplitz.StableParams(args.alpha, getattr(args, "beta", 0.0), args.K, args.L, n or getattr(args, "n", 1))


def cmd_weights(args, cfg):
    w = glweights.weights(args.alpha, args.count).values
    if cfg.format == "json":
        text = to_json({"schema": SCHEMA, "alpha": args.alpha, "weights": w.tolist()}) + "\n"
    else:
        text = csv_text(["n", "w"], ((i, float(v)) for i, v in enumerate(w)))
    return text, f"weights: alpha={fmt(args.alpha)} count={args.count} sum={fmt(math.fsum(w))}"


def cmd_matrix(args, cfg):
    p = _params(args)
    op = toeplitz.assemble(p)
    mat = op.dense()
    if cfg.format == "json":
        text = to_json(
            {
                "schema": SCHEMA,
                "alpha": p.alpha,
                "beta": p.beta,
                "n": p.n,
                "epsilon": p.epsilon,
                "scale": op.scale,
                "kernel": {"k_min": -(p.n - 1), "values": op.kernel.tolist()},
                "matrix": mat.tolist(),
            }
        ) + "\n"
    else:
        text = csv_text(["i", "j", "m"], ((i, j, float(mat[i, j])) for i in range(p.n) for j in range(p.n)))
    return text, f"matrix: alpha={fmt(p.alpha)} beta={fmt(p.beta)} n={p.n} scale={fmt(op.scale)}"


def cmd_spectrum(args, cfg):
    p = _params(args)
    report = spectra.spectral_report(p)
    data = report.to_dict()
    det = math.exp(report.log_det) * report.det_sign if report.log_det < 700 else None
    data["det"] = det
    if cfg.format == "json":
        text = to_json({"schema": SCHEMA, **data}) + "\n"
    else:
        if report.eigenvalues is None:
            raise UsageError("spectrum --format csv lists eigenvalues and needs --beta 0; use --format json")
        text = csv_text(
            ["k", "eigenvalue", "parity"],
            ((k, float(v), lab) for k, (v, lab) in enumerate(zip(report.eigenvalues, report.parity_labels), 1)),
        )
    det_text = fmt(det) if det is not None else "overflow"
    return text, f"spectrum: n={p.n} mean={fmt(report.mean)} log_det={fmt(report.log_det)} det={det_text}"


def cmd_symbol(args, cfg):
    p = _params(args)
    samples = toeplitz.symbol_curve(p, args.points, physical=args.physical)
    if cfg.format == "json":
        text = to_json(
            {
                "schema": SCHEMA,
                "alpha": p.alpha,
                "beta": p.beta,
                "physical": args.physical,
                "theta": [s.theta for s in samples],
                "u": [s.u for s in samples],
                "v": [s.v for s in samples],
            }
        ) + "\n"
    else:
        buf = io.StringIO()
        toeplitz.write_symbol_csv(samples, buf)
        text = buf.getvalue()
    dimless = samples if not args.physical else toeplitz.symbol_curve(p, args.points)
    worst = max(toeplitz.ellipse_residual(p, s) for s in dimless)
    return text, f"symbol: alpha={fmt(p.alpha)} beta={fmt(p.beta)} points={args.points} ellipse_residual={worst:.3e}"


def cmd_szego(args, cfg):
    m = args.kmax if args.m is None else args.m
    if m > args.kmax:
        raise UsageError(f"--m {m} exceeds --kmax {args.kmax}")
    scale = args.scale if args.scale is not None else toeplitz.StableParams(args.alpha, K_alpha=args.K).scale
    coeffs = szego.szego_coefficients(args.alpha, args.kmax, scale, args.method, not args.unshifted, cfg.quadrature())
    report = szego.szego_report(coeffs, m)
    if cfg.format == "json":
        text = to_json(report) + "\n"
    else:
        text = csv_text(["k", "coefficient"], [(0, coeffs.c0)] + list(enumerate(coeffs.ck, start=1)))
    return text, (
        f"szego: alpha={fmt(args.alpha)} method={args.method} logG={fmt(report['logG'])} "
        f"logE_partial(m={m})={fmt(report['logE_partial']['value'])}"
    )


def cmd_asymptote(args, cfg):
    m_rule = (lambda n: min(n, args.m_cap)) if args.m_cap is not None else None
    rows = szego.asymptote_study(args.alpha, args.n_list, m_rule, spec=cfg.quadrature())
    if cfg.format == "json":
        text = to_json(
            {
                "schema": SCHEMA,
                "alpha": args.alpha,
                "rows": [
                    {"n": r.n, "log_det": r.log_det, "n_c0": r.n_c0, "residual": r.residual, "diag": r.diag}
                    for r in rows
                ],
            }
        ) + "\n"
    else:
        buf = io.StringIO()
        szego.rows_to_csv(rows, buf)
        text = buf.getvalue()
    last = rows[-1]
    return text, f"asymptote: alpha={fmt(args.alpha)} n={last.n} residual={fmt(last.residual)} diag={fmt(last.diag)}"


COMMANDS = {
    "weights": cmd_weights,
    "matrix": cmd_matrix,
    "spectrum": cmd_spectrum,
    "symbol": cmd_symbol,
    "szego": cmd_szego,
    "asymptote": cmd_asymptote,
}


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="fractoeplitz",
        description="Toeplitz truncations of the discretized fractional Schroedinger operator.",
        epilog=f"Environment: {TOL_ENV} overrides the default quadrature tolerance (1e-12); --tol wins over it.",
    )
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(p, fmt_default="csv"):
        p.add_argument("--format", choices=("csv", "json"), default=fmt_default)
        p.add_argument("--output", "-o", help="artifact path (default: stdout)")
        p.add_argument("--tol", type=_positive_float, help=f"tolerance override (env: {TOL_ENV})")

    def physics(p, with_beta=True, with_n=True):
        p.add_argument("--alpha", type=_alpha, required=True, help="stability index in (1, 2]")
        if with_beta:
            p.add_argument("--beta", type=_beta, default=0.0, help="skewness in [-1, 1] (default 0)")
        p.add_argument("--K", type=_positive_float, default=1.0, help="K_alpha (default 1)")
        p.add_argument("--L", type=_positive_float, default=None, help="interval length (default n+1: unit spacing)")
        if with_n:
            p.add_argument("--n", type=_positive_int, required=True, help="number of interior grid points")

    p = sub.add_parser("weights", help="Grunwald-Letnikov weights w_0..w_count")
    p.add_argument("--alpha", type=_alpha, required=True)
    p.add_argument("--count", type=_nonneg_int, required=True)
    common(p)

    p = sub.add_parser("matrix", help="dimensionless Toeplitz matrix M_n")
    physics(p)
    common(p)

    p = sub.add_parser("spectrum", help="spectral report of M_n")
    physics(p)
    common(p, "json")

    p = sub.add_parser("symbol", help="symbol curve (theta, u, v) on the unit circle")
    physics(p, with_n=False)
    p.add_argument("--points", type=_positive_int, default=200)
    p.add_argument("--physical", action="store_true", help="multiply by the physical scale")
    common(p)

    p = sub.add_parser("szego", help="Fourier coefficients of log f and Szego constants (beta = 0)")
    p.add_argument("--alpha", type=_alpha, required=True)
    p.add_argument("--kmax", type=_nonneg_int, default=20)
    p.add_argument("--m", type=_nonneg_int, default=None, help="cutoff of the partial E sum (default kmax)")
    p.add_argument("--method", choices=szego.METHODS, default="quadrature")
    p.add_argument("--K", type=_positive_float, default=1.0, help="K_alpha; scale = K/|cos(pi alpha/2)|")
    p.add_argument("--scale", type=_positive_float, default=None, help="explicit physical scale (overrides --K)")
    p.add_argument("--unshifted", action="store_true", help="coefficients of the symbol vanishing at theta=0")
    common(p, "json")

    p = sub.add_parser("asymptote", help="log det M_n versus n c0 over a list of sizes")
    p.add_argument("--alpha", type=_alpha, required=True)
    p.add_argument("--n-list", type=_int_list, default=[50, 100, 200, 400], help="ascending sizes, e.g. 50,100,200")
    p.add_argument("--m-cap", type=_positive_int, default=None, help="cap on the partial E cutoff")
    common(p)
    return parser


def _tolerance(args) -> float | None:
    if args.tol is not None:
        return args.tol
    env = os.environ.get(TOL_ENV)
    if env is None:
        return None
    try:
        value = float(env)
    except ValueError:
        raise UsageError(f"{TOL_ENV}={env!r} is not a number") from None
    if not (value > 0.0 and math.isfinite(value)):
        raise UsageError(f"{TOL_ENV}={env!r} must be positive")
    return value


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        cfg = RunConfig(args.command, vars(args), args.output, args.format, _tolerance(args))
        text, summary = COMMANDS[args.command](args, cfg)
    except UsageError as exc:
        print(f"usage error: {exc}", file=stderr)
        return 1
    except SystemExit as exc:  # --help
        return 0 if exc.code in (0, None) else 1
    except DomainError as exc:
        print(f"usage error: {exc}", file=stderr)
        return 1
    except (ConvergenceError, RuntimeError, ValueError, ArithmeticError) as exc:
        print(f"numerical failure: {exc}", file=stderr)
        return 2

    if cfg.output_path:
        with open(cfg.output_path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
        print(f"{summary} -> {cfg.output_path}", file=stdout)
    else:
        stdout.write(text)
        print(summary, file=stderr)
    return 0


def main() -> None:
    sys.exit(run())
