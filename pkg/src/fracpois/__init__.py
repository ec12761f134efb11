"""Counting processes with Mittag-Leffler waiting times.

A numerical library for a family of renewal counting processes indexed
by an integer order ``n`` and a fractional order ``nu``: special
functions (Mittag-Leffler, its three-parameter extension, Wright),
distribution evaluators (counting masses, waiting and interarrival
densities, generating functions, moments), Monte Carlo path sampling,
and a self-contained verification suite of transform, kernel, and
residual cross-checks.

Public modules:
    special: series/integral evaluators for the underlying functions.
    models: process parameterization and distribution quantities.
    simulate: renewal path sampling and empirical statistics.
    verify: numerical cross-check harness (also ``fracpois verify``).
    cli: the ``fracpois`` command-line tool.
"""

from .errors import (
    CancellationWarning,
    ExtrapolationWarning,
    FracpoisError,
    InvalidParam,
    NonConvergence,
    NotApplicableWarning,
    NumericalInstability,
    QuadratureFailure,
    RootFindingFailure,
    StepTooCoarse,
)
from .models import (
    CheckReport,
    PmfRow,
    ProcessSpec,
    factorial_moment,
    interarrival_pdf,
    interarrival_tail_asymptote,
    odd_probability_sum,
    pgf,
    pmf,
    pmf_decomposition_check,
    renewal_mean,
    support_cutoff,
    waiting_time_cdf,
    waiting_time_pdf,
)
from .simulate import (
    RNG_ALGORITHM,
    EventPath,
    SimConfig,
    empirical_pmf,
    generate_paths,
    load_paths_jsonl,
    poisson_relabel_check,
    sample_interarrival_model1,
    sample_interarrivals_model1,
    sample_path,
    save_paths_jsonl,
)
from .special import (
    MLSpec,
    QuadPolicy,
    SeriesPolicy,
    gml_series,
    m_wright_kernel,
    ml2_neg_integral,
    ml_large_t_approx,
    ml_neg_cauchy,
    ml_neg_integral,
    ml_series,
    wright_neg_integral,
    wright_series,
)
from .verify import (
    GridSpec,
    caputo_residual,
    gml_laplace_identity,
    laplace_forward,
    ml_transform_check,
    run_suite,
    subordination_pmf,
    verify_transform_pairs,
)

__version__ = "0.1.0"

__all__ = [
    "CancellationWarning",
    "CheckReport",
    "EventPath",
    "ExtrapolationWarning",
    "FracpoisError",
    "GridSpec",
    "InvalidParam",
    "MLSpec",
    "NonConvergence",
    "NotApplicableWarning",
    "NumericalInstability",
    "PmfRow",
    "ProcessSpec",
    "QuadPolicy",
    "QuadratureFailure",
    "RNG_ALGORITHM",
    "RootFindingFailure",
    "SeriesPolicy",
    "SimConfig",
    "StepTooCoarse",
    "__version__",
    "caputo_residual",
    "empirical_pmf",
    "factorial_moment",
    "generate_paths",
    "gml_laplace_identity",
    "gml_series",
    "interarrival_pdf",
    "interarrival_tail_asymptote",
    "laplace_forward",
    "load_paths_jsonl",
    "m_wright_kernel",
    "ml2_neg_integral",
    "ml_large_t_approx",
    "ml_neg_cauchy",
    "ml_neg_integral",
    "ml_series",
    "ml_transform_check",
    "odd_probability_sum",
    "pgf",
    "pmf",
    "pmf_decomposition_check",
    "poisson_relabel_check",
    "renewal_mean",
    "run_suite",
    "sample_interarrival_model1",
    "sample_interarrivals_model1",
    "sample_path",
    "save_paths_jsonl",
    "subordination_pmf",
    "support_cutoff",
    "verify_transform_pairs",
    "waiting_time_cdf",
    "waiting_time_pdf",
    "wright_neg_integral",
    "wright_series",
]
