"""Self-contained invariant checks, runnable from the command line.

Each check returns a (name, passed, detail) record; the CLI prints one line
per record and fails the run if any record fails.  `tolerance_scale`
multiplies every tolerance, so a deliberately corrupted scale (much smaller
than 1) must make the suite fail -- a self-test that the harness actually
compares numbers.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import dependence as dep
from . import distribution as dist
from . import simulate as sim
from .intensity import FiniteIntensity, GeometricIntensity

_GRID_MODELS = (
    GeometricIntensity(1.0, 0.5),
    FiniteIntensity([1.0]),
    FiniteIntensity([2.0, 1.0, 0.5]),
)
_GRID_ALPHAS = (0.5, 0.7, 1.0)
_GRID_TIMES = (0.5, 1.0, 5.0)


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str


def check_normalization(tolerance_scale=1.0):
    tol = 1e-6 * tolerance_scale
    worst = 0.0
    where = ""
    for alpha in _GRID_ALPHAS:
        for model in _GRID_MODELS:
            for t in _GRID_TIMES:
                sd = dist.pmf_cfpp(model, alpha, t)
                if sd.truncation_mass > worst:
                    worst = sd.truncation_mass
                    where = f"alpha={alpha}, t={t}, {model.to_config()}"
    return CheckResult(
        "normalization",
        worst <= tol,
        f"worst truncation mass {worst:.3e} (tol {tol:.1e}) at {where}",
    )


def check_three_way_equivalence(tolerance_scale=1.0, n_max=12):
    tol = 1e-10 * tolerance_scale
    worst = 0.0
    for alpha in _GRID_ALPHAS:
        for model in _GRID_MODELS:
            for t in (0.5, 1.5):
                a = dist.pmf_cfpp(model, alpha, t, n_max).probs
                b = dist.pmf_cfpp_theta(model, alpha, t, n_max).probs
                c = dist.pmf_cfpp_composition(model, alpha, t, n_max).probs
                worst = max(
                    worst,
                    float(np.abs(a - b).max()),
                    float(np.abs(b - c).max()),
                    float(np.abs(a - c).max()),
                )
    return CheckResult(
        "three-way-pmf-equivalence",
        worst <= tol,
        f"worst pairwise deviation {worst:.3e} (tol {tol:.1e})",
    )


def check_mc_agreement(tolerance_scale=1.0, n_samples=20_000, seed=99):
    level = 3.0 * tolerance_scale
    worst = 0.0
    where = ""
    for alpha in (0.7, 1.0):
        for method in (sim.METHOD_TIME_CHANGE, sim.METHOD_RENEWAL):
            model = GeometricIntensity(1.0, 0.5)
            cfg = sim.SamplerConfig(seed=seed, n_samples=n_samples, method=method)
            rep = sim.mc_pmf(model, alpha, 1.0, cfg)
            exact = dist.pmf_cfpp(model, alpha, 1.0, max(10, len(rep.empirical_pmf) - 1))
            for n in range(min(11, len(rep.empirical_pmf))):
                se = max(rep.pmf_se[n], 1e-12)
                z = abs(rep.empirical_pmf[n] - exact.probs[n]) / se
                if z > worst:
                    worst = z
                    where = f"alpha={alpha}, {method}, n={n}"
            z = abs(rep.sample_mean - dist.mean_cfpp(model, alpha, 1.0)) / max(rep.mean_se, 1e-12)
            if z > worst:
                worst, where = z, f"alpha={alpha}, {method}, mean"
            z = abs(rep.sample_var - dist.var_cfpp(model, alpha, 1.0)) / max(rep.var_se, 1e-12)
            if z > worst:
                worst, where = z, f"alpha={alpha}, {method}, variance"
    return CheckResult(
        "mc-agreement",
        worst <= level,
        f"worst deviation {worst:.2f} SE (limit {level:.2f}) at {where}",
    )


def check_dependence_slopes(tolerance_scale=1.0):
    tol = 0.05 * tolerance_scale
    model = GeometricIntensity(0.5, 0.9)
    worst = 0.0
    where = ""
    for alpha in (0.5, 0.7, 0.9):
        slope = dep.corr_decay_exponent(model, alpha, 1.0)
        err = abs(slope + alpha)
        if err > worst:
            worst, where = err, f"process slope alpha={alpha}"
        slope_z = dep.increment_corr_decay_exponent(model, alpha, 1.0, 1.0)
        err = abs(slope_z + (3.0 - alpha) / 2.0)
        if err > worst:
            worst, where = err, f"increment slope alpha={alpha}"
    return CheckResult(
        "dependence-slopes",
        worst <= tol,
        f"worst slope error {worst:.4f} (tol {tol:.3f}) at {where}",
    )


def check_variance_consistency(tolerance_scale=1.0):
    tol = 1e-10 * tolerance_scale
    worst = 0.0
    for alpha in (0.5, 0.8, 1.0):
        for model in _GRID_MODELS:
            for t in (0.5, 2.0):
                m1 = dist.moment(model, alpha, t, 1)
                m2 = dist.moment(model, alpha, t, 2)
                v = dist.var_cfpp(model, alpha, t)
                worst = max(worst, abs(m2 - m1**2 - v) / max(v, 1.0))
                if 0 < alpha < 1:
                    cv = dep.cov_cfpp(model, alpha, t, t)
                    worst = max(worst, abs(cv - v) / max(v, 1.0))
    return CheckResult(
        "variance-consistency",
        worst <= tol,
        f"worst relative deviation {worst:.3e} (tol {tol:.1e})",
    )


def run_all(tolerance_scale=1.0, mc_samples=20_000, seed=99):
    return [
        check_normalization(tolerance_scale),
        check_three_way_equivalence(tolerance_scale),
        check_variance_consistency(tolerance_scale),
        check_mc_agreement(tolerance_scale, mc_samples, seed),
        check_dependence_slopes(tolerance_scale),
    ]
