"""Convoluted (fractional) Poisson counting processes.

Exact distributions, generating functions, moments, Monte Carlo samplers,
and second-order dependence structure for counting processes driven by a
non-increasing intensity sequence {lambda_j}, including the classical
Poisson, compound-Poisson, and fractional-Poisson special cases.
"""

__version__ = "0.1.0"

from .dependence import (
    DependenceParams,
    corr_cfpp,
    corr_decay_exponent,
    corr_increment,
    cov_cfpp,
    cov_increment,
    cov_inverse_stable,
    fit_tail_exponent,
    geometric_grid,
    increment_corr_decay_exponent,
    lrd_constant,
    var_increment,
)
from .distribution import (
    MomentReport,
    StateDistribution,
    default_n_max,
    factorial_moment,
    laplace_pgf,
    laplace_pmf,
    mean_cfpp,
    mgf,
    moment,
    moment_report,
    pgf,
    pmf_cfpp,
    pmf_cfpp_composition,
    pmf_cfpp_theta,
    pmf_cpp,
    pmf_tfpp,
    var_cfpp,
)
from .errors import DegenerateFitError, DomainError, NonConvergenceError
from .intensity import (
    FiniteIntensity,
    GeometricIntensity,
    IntensityModel,
    delta,
    delta_series,
    from_config,
    jump_pmf,
    lambda_at,
    power_delta_sum,
)
from .partitions import (
    bell_ordinary,
    enumerate_compositions,
    enumerate_lambda,
    enumerate_theta,
    enumerate_weak_compositions,
)
from .simulate import (
    MCReport,
    SamplerConfig,
    mc_moments,
    mc_pmf,
    ml_waiting_time,
    sample_cfpp,
    sample_cfpp_batch,
    sample_inverse_stable,
    sample_jump,
    sample_stable,
)
from .special import (
    EvalOptions,
    MLParams,
    complete_beta,
    incomplete_beta,
    ml_deriv,
    ml_one,
    ml_three,
    ml_two,
    ml_weights,
)

__all__ = [
    "__version__",
    "DependenceParams",
    "DegenerateFitError",
    "DomainError",
    "EvalOptions",
    "FiniteIntensity",
    "GeometricIntensity",
    "IntensityModel",
    "MCReport",
    "MLParams",
    "MomentReport",
    "NonConvergenceError",
    "SamplerConfig",
    "StateDistribution",
    "bell_ordinary",
    "complete_beta",
    "corr_cfpp",
    "corr_decay_exponent",
    "corr_increment",
    "cov_cfpp",
    "cov_increment",
    "cov_inverse_stable",
    "default_n_max",
    "delta",
    "delta_series",
    "enumerate_compositions",
    "enumerate_lambda",
    "enumerate_theta",
    "enumerate_weak_compositions",
    "factorial_moment",
    "fit_tail_exponent",
    "from_config",
    "geometric_grid",
    "incomplete_beta",
    "increment_corr_decay_exponent",
    "jump_pmf",
    "lambda_at",
    "laplace_pgf",
    "laplace_pmf",
    "lrd_constant",
    "mc_moments",
    "mc_pmf",
    "mean_cfpp",
    "mgf",
    "ml_deriv",
    "ml_one",
    "ml_three",
    "ml_two",
    "ml_waiting_time",
    "ml_weights",
    "moment",
    "moment_report",
    "pgf",
    "pmf_cfpp",
    "pmf_cfpp_composition",
    "pmf_cfpp_theta",
    "pmf_cpp",
    "pmf_tfpp",
    "power_delta_sum",
    "sample_cfpp",
    "sample_cfpp_batch",
    "sample_inverse_stable",
    "sample_jump",
    "sample_stable",
    "var_cfpp",
    "var_increment",
]
