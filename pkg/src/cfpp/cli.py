"""Command-line front end: pmf | moments | pgf | simulate | dependence | validate.

Every run reads an intensity/parameter config (JSON), writes CSV for
tabular payloads or JSON for reports with metadata, and exits with
0 = success, 1 = validation-suite failure, 2 = bad config,
3 = numeric domain error.
"""

from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from . import __version__
from . import dependence as dep
from . import distribution as dist
from . import intensity as intens
from . import simulate as sim
from . import validate as val
from .errors import DegenerateFitError, DomainError, NonConvergenceError

EXIT_OK = 0
EXIT_VALIDATION_FAILED = 1
EXIT_BAD_CONFIG = 2
EXIT_NUMERIC = 3

_METHOD_FLAGS = {
    "time-change": sim.METHOD_TIME_CHANGE,
    "renewal": sim.METHOD_RENEWAL,
}


class ConfigError(Exception):
    pass


def _load_config(path):
    if path is None:
        raise ConfigError("this command requires --config")
    try:
        with open(path) as fh:
            raw = json.load(fh)
    except OSError as exc:
        raise ConfigError(f"cannot read config: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ConfigError(f"config is not valid JSON: {exc}") from exc
    if not isinstance(raw, dict):
        raise ConfigError("config must be a JSON object")
    return raw


def _resolve(raw):
    """Validate the common fields and build the intensity model."""
    try:
        model = intens.from_config(raw.get("intensity", {}))
    except DomainError as exc:
        raise ConfigError(str(exc)) from exc
    alpha = float(raw.get("alpha", 1.0))
    if not 0.0 < alpha <= 1.0:
        raise ConfigError(f"alpha must lie in (0, 1], got {alpha}")
    t = float(raw.get("t", 1.0))
    if t < 0:
        raise ConfigError(f"t must be nonnegative, got {t}")
    return model, alpha, t


def _emit(text, output):
    if output is None:
        sys.stdout.write(text)
    else:
        with open(output, "w") as fh:
            fh.write(text)


def _json_report(payload, resolved_config):
    doc = dict(payload)
    doc["version"] = __version__
    doc["config"] = resolved_config
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def cmd_pmf(args):
    raw = _load_config(args.config)
    model, alpha, t = _resolve(raw)
    n_max = raw.get("n_max")
    if n_max is not None:
        n_max = int(n_max)
    engines = {
        "lambda": dist.pmf_cfpp,
        "theta": dist.pmf_cfpp_theta,
        "composition": dist.pmf_cfpp_composition,
    }
    sd = engines[args.formula](model, alpha, t, n_max)
    resolved = {
        "intensity": model.to_config(),
        "alpha": alpha,
        "t": t,
        "n_max": sd.n_max,
        "formula": sd.formula,
    }
    if args.format == "csv":
        _emit(dist.state_distribution_csv(sd), args.output)
    else:
        payload = {
            "probs": [float(p) for p in sd.probs],
            "truncation_mass": sd.truncation_mass,
            "formula": sd.formula,
        }
        _emit(_json_report(payload, resolved), args.output)
    return EXIT_OK


def cmd_moments(args):
    raw = _load_config(args.config)
    model, alpha, t = _resolve(raw)
    r_max = int(raw.get("r_max", 4))
    report = dist.moment_report(model, alpha, t, r_max)
    resolved = {"intensity": model.to_config(), "alpha": alpha, "t": t, "r_max": r_max}
    if args.format == "csv":
        lines = ["statistic,value"]
        lines.append(f"mean,{report.mean!r}")
        lines.append(f"variance,{report.variance!r}")
        for r, v in enumerate(report.raw_moments, start=1):
            lines.append(f"moment_{r},{v!r}")
        for r, v in enumerate(report.factorial_moments, start=1):
            lines.append(f"factorial_moment_{r},{v!r}")
        _emit("\n".join(lines) + "\n", args.output)
    else:
        payload = {
            "mean": report.mean,
            "variance": report.variance,
            "raw_moments": list(report.raw_moments),
            "factorial_moments": list(report.factorial_moments),
        }
        _emit(_json_report(payload, resolved), args.output)
    return EXIT_OK


def cmd_pgf(args):
    raw = _load_config(args.config)
    model, alpha, t = _resolve(raw)
    u_spec = raw.get("u", [round(0.1 * i, 1) for i in range(11)])
    u_values = [float(u_spec)] if np.isscalar(u_spec) else [float(u) for u in u_spec]
    rows = [(u, dist.pgf(model, alpha, t, u)) for u in u_values]
    resolved = {"intensity": model.to_config(), "alpha": alpha, "t": t, "u": u_values}
    if args.format == "csv":
        lines = ["u,pgf,alpha,t"]
        for u, g in rows:
            lines.append(f"{u!r},{g!r},{alpha!r},{t!r}")
        _emit("\n".join(lines) + "\n", args.output)
    else:
        payload = {"pgf": [{"u": u, "value": g} for u, g in rows]}
        _emit(_json_report(payload, resolved), args.output)
    return EXIT_OK


def cmd_simulate(args):
    raw = _load_config(args.config)
    model, alpha, t = _resolve(raw)
    try:
        cfg = sim.SamplerConfig(
            seed=args.seed,
            n_samples=args.samples,
            workers=args.workers,
            method=_METHOD_FLAGS[args.method],
        )
    except DomainError as exc:
        raise ConfigError(str(exc)) from exc
    report = sim.mc_pmf(model, alpha, t, cfg)
    resolved = {
        "intensity": model.to_config(),
        "alpha": alpha,
        "t": t,
        "seed": report.seed,
        "n_samples": report.n_samples,
        "workers": report.workers,
        "method": report.method,
    }
    if args.format == "csv":
        lines = ["n,p_hat,se"]
        for n, (p, se) in enumerate(zip(report.empirical_pmf, report.pmf_se)):
            lines.append(f"{n},{float(p)!r},{float(se)!r}")
        _emit("\n".join(lines) + "\n", args.output)
    else:
        payload = {
            "empirical_pmf": [float(p) for p in report.empirical_pmf],
            "pmf_se": [float(s) for s in report.pmf_se],
            "sample_mean": report.sample_mean,
            "mean_se": report.mean_se,
            "sample_var": report.sample_var,
            "var_se": report.var_se,
        }
        _emit(_json_report(payload, resolved), args.output)
    return EXIT_OK


def cmd_dependence(args):
    raw = _load_config(args.config)
    model, alpha, _ = _resolve(raw)
    s = args.s
    resolved = {
        "intensity": model.to_config(),
        "alpha": alpha,
        "mode": args.mode,
        "s": s,
        "delta": args.delta,
        "t_min": args.t_min,
        "t_max": args.t_max,
        "points": args.points,
    }
    if args.mode == "slope":
        rows = [
            ("process", dep.corr_decay_exponent(model, alpha, s, args.t_min, args.t_max, args.points)),
            (
                "increment",
                dep.increment_corr_decay_exponent(
                    model, alpha, s, args.delta, args.t_min, args.t_max, args.points
                ),
            ),
        ]
        if args.format == "csv":
            lines = ["curve,s,delta,slope"]
            for curve, slope in rows:
                lines.append(f"{curve},{s!r},{args.delta!r},{slope!r}")
            _emit("\n".join(lines) + "\n", args.output)
        else:
            payload = {"slopes": {curve: slope for curve, slope in rows}}
            _emit(_json_report(payload, resolved), args.output)
        return EXIT_OK

    grid = dep.geometric_grid(args.t_min, args.t_max, args.points)
    out_rows = []
    for t in grid:
        t = float(t)
        lo, hi = min(s, t), max(s, t)
        if args.mode == "process":
            cov = dep.cov_cfpp(model, alpha, lo, hi)
            corr = dep.corr_cfpp(model, alpha, lo, hi)
        else:
            cov = dep.cov_increment(model, alpha, lo, hi, args.delta)
            corr = dep.corr_increment(model, alpha, lo, hi, args.delta)
        out_rows.append((s, t, cov, corr))
    if args.format == "csv":
        lines = ["s,t,cov,corr,mode"]
        for s_, t_, cov, corr in out_rows:
            lines.append(f"{s_!r},{t_!r},{cov!r},{corr!r},{args.mode}")
        _emit("\n".join(lines) + "\n", args.output)
    else:
        payload = {
            "pairs": [
                {"s": s_, "t": t_, "cov": cov, "corr": corr}
                for s_, t_, cov, corr in out_rows
            ]
        }
        _emit(_json_report(payload, resolved), args.output)
    return EXIT_OK


def cmd_validate(args):
    results = val.run_all(
        tolerance_scale=args.tolerance_scale,
        mc_samples=args.mc_samples,
        seed=args.seed,
    )
    lines = []
    for r in results:
        status = "PASS" if r.passed else "FAIL"
        lines.append(f"{status} {r.name}: {r.detail}")
    text = "\n".join(lines) + "\n"
    sys.stdout.write(text)
    if args.output:
        payload = {
            "checks": [
                {"name": r.name, "passed": r.passed, "detail": r.detail}
                for r in results
            ]
        }
        resolved = {
            "tolerance_scale": args.tolerance_scale,
            "mc_samples": args.mc_samples,
            "seed": args.seed,
        }
        _emit(_json_report(payload, resolved), args.output)
    return EXIT_OK if all(r.passed for r in results) else EXIT_VALIDATION_FAILED


def build_parser():
    parser = argparse.ArgumentParser(
        prog="cfpp",
        description="Distributions, moments, simulation, and dependence "
        "structure of convoluted (fractional) Poisson counting processes.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--config", help="JSON config path")
        p.add_argument("--output", help="output file (default stdout)")
        p.add_argument("--format", choices=("csv", "json"), default="csv")

    p = sub.add_parser("pmf", help="exact count distribution at a fixed time")
    common(p)
    p.add_argument(
        "--formula",
        choices=("lambda", "theta", "composition"),
        default="lambda",
        help="computation path (theta/composition are slow oracle paths)",
    )
    p.set_defaults(func=cmd_pmf)

    p = sub.add_parser("moments", help="mean, variance, raw and factorial moments")
    common(p)
    p.set_defaults(func=cmd_moments)

    p = sub.add_parser("pgf", help="probability generating function values")
    common(p)
    p.set_defaults(func=cmd_pgf)

    p = sub.add_parser("simulate", help="Monte Carlo sampling of counts")
    common(p)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--samples", type=int, default=100_000)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--method", choices=tuple(_METHOD_FLAGS), default="time-change")
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("dependence", help="covariance/correlation structure")
    common(p)
    p.add_argument("--mode", choices=("process", "increment", "slope"), default="process")
    p.add_argument("--s", type=float, default=1.0)
    p.add_argument("--t-min", type=float, default=1e2, dest="t_min")
    p.add_argument("--t-max", type=float, default=1e6, dest="t_max")
    p.add_argument("--points", type=int, default=17)
    p.add_argument("--delta", type=float, default=1.0)
    p.set_defaults(func=cmd_dependence)

    p = sub.add_parser("validate", help="run the built-in invariant suite")
    p.add_argument("--config", help="unused; accepted for interface uniformity")
    p.add_argument("--output", help="optional JSON report path")
    p.add_argument("--tolerance-scale", type=float, default=1.0, dest="tolerance_scale")
    p.add_argument("--mc-samples", type=int, default=20_000, dest="mc_samples")
    p.add_argument("--seed", type=int, default=99)
    p.set_defaults(func=cmd_validate)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_CONFIG
    except (DomainError, NonConvergenceError, DegenerateFitError) as exc:
        print(f"numeric error: {exc}", file=sys.stderr)
        return EXIT_NUMERIC


if __name__ == "__main__":
    sys.exit(main())
