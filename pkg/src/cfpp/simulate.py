"""Monte Carlo sampling of the counting process, with reproducible streams.

Two exact samplers are provided for the count at a fixed time t:

* ``TimeChange`` -- draw the inverse-stable time H(t) = (t / S)^alpha from a
  one-sided stable variate S, then a Poisson(lambda_0 H) number of iid jumps.
* ``RenewalCompound`` -- accumulate Mittag-Leffler waiting times until they
  pass t, scoring one iid jump per renewal as it arrives.

Reproducibility contract: worker w draws from the substream spawned from
(seed, w) and contributes ceil(n_samples / workers) samples; results are
merged in worker order, so a report depends only on (seed, workers).
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from . import intensity as intens
from .errors import DomainError

METHOD_TIME_CHANGE = "TimeChange"
METHOD_RENEWAL = "RenewalCompound"
_METHODS = (METHOD_TIME_CHANGE, METHOD_RENEWAL)


@dataclass(frozen=True)
class SamplerConfig:
    seed: int
    n_samples: int = 100_000
    workers: int = 1
    method: str = METHOD_TIME_CHANGE

    def __post_init__(self):
        if self.n_samples < 1:
            raise DomainError(f"n_samples must be >= 1, got {self.n_samples}")
        if self.workers < 1:
            raise DomainError(f"workers must be >= 1, got {self.workers}")
        if self.method not in _METHODS:
            raise DomainError(f"method must be one of {_METHODS}, got {self.method!r}")


@dataclass(frozen=True)
class MCReport:
    empirical_pmf: np.ndarray
    pmf_se: np.ndarray
    sample_mean: float
    mean_se: float
    sample_var: float
    var_se: float
    n_samples: int
    seed: int
    workers: int
    method: str


def sample_stable(alpha: float, rng, size=None):
    """Standard one-sided alpha-stable variate(s) with E e^(-s S) = e^(-s^alpha).

    Chambers-Mallows-Stuck construction specialized to maximal skew.  The
    alpha = 1 limit is the point mass at 1 and is not covered here; callers
    branch on it.
    """
    if not 0.0 < alpha < 1.0:
        raise DomainError(f"stable sampling needs 0 < alpha < 1, got {alpha}")
    scalar = size is None
    n = 1 if scalar else size
    v = rng.uniform(-np.pi / 2.0, np.pi / 2.0, n)
    w = rng.exponential(1.0, n)
    shifted = alpha * (v + np.pi / 2.0)
    s = (np.sin(shifted) / np.cos(v) ** (1.0 / alpha)) * (
        np.cos(v - shifted) / w
    ) ** ((1.0 - alpha) / alpha)
    return float(s[0]) if scalar else s


def sample_inverse_stable(alpha: float, t: float, rng, size=None):
    """Inverse alpha-stable subordinator marginal H(t) = (t / S)^alpha."""
    if not 0.0 < alpha <= 1.0:
        raise DomainError(f"alpha must lie in (0, 1], got {alpha}")
    if t <= 0:
        raise DomainError(f"t must be positive, got {t}")
    if alpha == 1.0:
        return float(t) if size is None else np.full(size, float(t))
    s = sample_stable(alpha, rng, size)
    return (t / s) ** alpha


def ml_waiting_time(alpha: float, lambda0: float, rng, size=None):
    """Mittag-Leffler waiting time(s) with survival E_alpha(-lambda_0 t^alpha).

    Exponential-mixture form W = -ln(U) Z^(1/alpha) / lambda_0^(1/alpha)
    with Z = sin(alpha pi) / tan(alpha pi V) - cos(alpha pi); reduces to an
    Exponential(lambda_0) at alpha = 1.
    """
    if not 0.0 < alpha <= 1.0:
        raise DomainError(f"alpha must lie in (0, 1], got {alpha}")
    if lambda0 <= 0:
        raise DomainError(f"lambda_0 must be positive, got {lambda0}")
    scalar = size is None
    n = 1 if scalar else size
    if alpha == 1.0:
        w = rng.exponential(1.0 / lambda0, n)
        return float(w[0]) if scalar else w
    u = rng.random(n)
    v = rng.random(n)
    with np.errstate(divide="ignore"):
        z = np.sin(alpha * np.pi) / np.tan(alpha * np.pi * v) - np.cos(alpha * np.pi)
        w = -np.log1p(-u) * z ** (1.0 / alpha) * lambda0 ** (-1.0 / alpha)
    return float(w[0]) if scalar else w


class JumpSampler:
    """Sampler for the jump-size law delta_j / lambda_0.

    Geometric intensities give a geometric jump law on {1, 2, ...} drawn by
    closed-form inversion; finite intensities get a Vose alias table over
    their bounded support.
    """

    def __init__(self, model):
        self._model = model
        if isinstance(model, intens.GeometricIntensity):
            self._p_success = 1.0 - model.q
            self._alias = None
        else:
            support = model.jump_support_max
            probs = np.array([intens.jump_pmf(model, j) for j in range(1, support + 1)])
            self._alias = _build_alias(probs)

    def sample(self, rng, size=None):
        scalar = size is None
        n = 1 if scalar else size
        if self._alias is None:
            out = rng.geometric(self._p_success, n)
        else:
            prob, alias = self._alias
            m = len(prob)
            cell = rng.integers(0, m, n)
            accept = rng.random(n) < prob[cell]
            out = np.where(accept, cell, alias[cell]) + 1
        return int(out[0]) if scalar else out.astype(np.int64)


def _build_alias(probs):
    m = len(probs)
    scaled = probs * m
    prob = np.zeros(m)
    alias = np.zeros(m, dtype=np.int64)
    small = [i for i in range(m) if scaled[i] < 1.0]
    large = [i for i in range(m) if scaled[i] >= 1.0]
    scaled = scaled.copy()
    while small and large:
        s = small.pop()
        g = large.pop()
        prob[s] = scaled[s]
        alias[s] = g
        scaled[g] = scaled[g] - (1.0 - scaled[s])
        (small if scaled[g] < 1.0 else large).append(g)
    for i in large + small:
        prob[i] = 1.0
    return prob, alias


def sample_jump(model, rng, size=None):
    """One jump (or `size` jumps) from the law delta_j / lambda_0."""
    return JumpSampler(model).sample(rng, size)


def _jump_totals(jump_sampler, counts, rng):
    """Sum counts[i] iid jumps for every i, vectorized."""
    total = int(counts.sum())
    if total == 0:
        return np.zeros(len(counts), dtype=np.int64)
    jumps = jump_sampler.sample(rng, total)
    owner = np.repeat(np.arange(len(counts)), counts)
    return np.bincount(owner, weights=jumps, minlength=len(counts)).astype(np.int64)


def sample_cfpp_batch(model, alpha, t, rng, size, method=METHOD_TIME_CHANGE):
    """Vector of `size` iid counts at time t."""
    if t < 0:
        raise DomainError(f"t must be nonnegative, got {t}")
    if not 0.0 < alpha <= 1.0:
        raise DomainError(f"alpha must lie in (0, 1], got {alpha}")
    if method not in _METHODS:
        raise DomainError(f"method must be one of {_METHODS}, got {method!r}")
    if t == 0:
        return np.zeros(size, dtype=np.int64)
    lam0 = model.lambda_at(0)
    sampler = JumpSampler(model)
    if method == METHOD_TIME_CHANGE:
        h = sample_inverse_stable(alpha, t, rng, size)
        n_events = rng.poisson(lam0 * h)
        return _jump_totals(sampler, n_events, rng)
    # Renewal route: draw each event's jump together with its waiting time,
    # so runs with the same seed give nested paths as t grows.
    totals = np.zeros(size, dtype=np.int64)
    clock = np.zeros(size)
    active = np.arange(size)
    while active.size:
        clock[active] += ml_waiting_time(alpha, lam0, rng, active.size)
        arrived = clock[active] <= t
        active = active[arrived]
        if active.size:
            totals[active] += sampler.sample(rng, active.size)
    return totals


def sample_cfpp(model, alpha, t, rng, method=METHOD_TIME_CHANGE):
    """One count at time t."""
    return int(sample_cfpp_batch(model, alpha, t, rng, 1, method)[0])


def _all_counts(model, alpha, t, cfg):
    per_worker = math.ceil(cfg.n_samples / cfg.workers)
    streams = np.random.SeedSequence(cfg.seed).spawn(cfg.workers)

    def draw(w):
        rng = np.random.default_rng(streams[w])
        return sample_cfpp_batch(model, alpha, t, rng, per_worker, cfg.method)

    if cfg.workers == 1:
        chunks = [draw(0)]
    else:
        with ThreadPoolExecutor(max_workers=cfg.workers) as pool:
            chunks = list(pool.map(draw, range(cfg.workers)))
    return np.concatenate(chunks)


def _report_from_counts(counts, cfg):
    n = len(counts)
    freq = np.bincount(counts)
    pmf = freq / n
    pmf_se = np.sqrt(pmf * (1.0 - pmf) / n)
    mean = float(counts.mean())
    sd = float(counts.std(ddof=1)) if n > 1 else 0.0
    var = sd**2
    centered = counts - mean
    m4 = float(np.mean(centered**4))
    var_se = math.sqrt(max(m4 - var**2, 0.0) / n)
    return MCReport(
        empirical_pmf=pmf,
        pmf_se=pmf_se,
        sample_mean=mean,
        mean_se=sd / math.sqrt(n),
        sample_var=var,
        var_se=var_se,
        n_samples=n,
        seed=cfg.seed,
        workers=cfg.workers,
        method=cfg.method,
    )


def mc_pmf(model, alpha, t, cfg: SamplerConfig) -> MCReport:
    """Empirical count distribution with cell standard errors."""
    return _report_from_counts(_all_counts(model, alpha, t, cfg), cfg)


def mc_moments(model, alpha, t, cfg: SamplerConfig) -> MCReport:
    """Empirical mean and variance with standard errors (same report type)."""
    return _report_from_counts(_all_counts(model, alpha, t, cfg), cfg)
