"""Closed-form distributions for Mittag-Leffler renewal counting processes.

An order-``n`` process counts every ``n``-th renewal epoch of a stream whose
interarrival survival function is ``E_{nu,1}(-lam * t**nu)``.  ``n = 1`` is
the fractional analogue of the Poisson process, ``n = 2`` counts event pairs,
and general ``n`` counts batches of ``n``.  Setting ``nu = 1`` recovers the
classical exponential-interarrival processes.

All distribution values reduce to sums of generalized Mittag-Leffler terms
``x**m * E^d_{nu, nu*m+1}(-x)`` with ``x = lam * t**nu``; they are evaluated
through the routed backend in :mod:`fracpois.special`, which switches between
series summation and branch-cut integral representations as accuracy demands.
"""

import math
import numbers
import warnings
from dataclasses import dataclass

import numpy as np
import scipy.special as sc

from .errors import InvalidParam, NonConvergence, NotApplicableWarning, ExtrapolationWarning
from .special import _gml_neg

__all__ = [
    "ProcessSpec",
    "PmfRow",
    "CheckReport",
    "pmf",
    "pmf_decomposition_check",
    "waiting_time_pdf",
    "waiting_time_cdf",
    "interarrival_pdf",
    "interarrival_tail_asymptote",
    "pgf",
    "factorial_moment",
    "renewal_mean",
    "odd_probability_sum",
    "support_cutoff",
]


def _require(cond, msg):
    if not cond:
        raise InvalidParam(msg)


def _check_count(value, name, minimum=0):
    _require(isinstance(value, numbers.Integral) and not isinstance(value, bool),
             f"{name} must be an integer, got {value!r}")
    _require(value >= minimum, f"{name} must be >= {minimum}, got {value!r}")
    return int(value)


def _check_time(value, name, positive=True):
    _require(isinstance(value, numbers.Real) and not isinstance(value, bool)
             and math.isfinite(float(value)),
             f"{name} must be a finite real number, got {value!r}")
    value = float(value)
    if positive:
        _require(value > 0.0, f"{name} must be positive, got {value!r}")
    else:
        _require(value >= 0.0, f"{name} must be nonnegative, got {value!r}")
    return value


@dataclass(frozen=True)
class ProcessSpec:
    """Parameters of an order-``n`` Mittag-Leffler renewal counting process.

    Attributes:
        n: model order, integer >= 1.  Order 1 counts every renewal; order
            ``n`` counts every ``n``-th one.
        nu: fractional index in (0, 1]; ``nu = 1`` gives the classical
            (exponential-interarrival) processes.
        lam: rate parameter, > 0, with units 1/time**nu.
    """

    n: int
    nu: float
    lam: float

    def __post_init__(self):
        _require(isinstance(self.n, numbers.Integral) and not isinstance(self.n, bool),
                 f"n must be an integer, got {self.n!r}")
        _require(self.n >= 1, f"n must be >= 1, got {self.n!r}")
        nu = self.nu
        _require(isinstance(nu, numbers.Real) and math.isfinite(float(nu))
                 and 0.0 < float(nu) <= 1.0,
                 f"nu must lie in (0, 1], got {nu!r}")
        lam = self.lam
        _require(isinstance(lam, numbers.Real) and math.isfinite(float(lam))
                 and float(lam) > 0.0,
                 f"lam must be positive and finite, got {lam!r}")
        object.__setattr__(self, "n", int(self.n))
        object.__setattr__(self, "nu", float(nu))
        object.__setattr__(self, "lam", float(lam))


@dataclass(frozen=True)
class PmfRow:
    """One tabulated probability mass value.

    Attributes:
        k: event count, integer >= 0.
        t: evaluation time, > 0.
        p: probability mass at ``k``, in [0, 1].
    """

    k: int
    t: float
    p: float

    def __post_init__(self):
        _require(isinstance(self.k, numbers.Integral) and not isinstance(self.k, bool)
                 and self.k >= 0, f"k must be an integer >= 0, got {self.k!r}")
        _require(float(self.t) > 0.0, f"t must be positive, got {self.t!r}")
        _require(0.0 <= float(self.p) <= 1.0,
                 f"p must lie in [0, 1], got {self.p!r}")


@dataclass(frozen=True)
class CheckReport:
    """Outcome of one numerical identity check.

    ``passed`` is true precisely when ``abs_err <= tol or rel_err <= tol``.
    (The field is named ``passed`` rather than the reserved word ``pass``;
    serialized reports use the key ``"pass"``.)

    Attributes:
        name: identity label.
        lhs: left-hand value.
        rhs: right-hand (reference) value.
        abs_err: ``|lhs - rhs|``.
        rel_err: ``abs_err / max(|lhs|, |rhs|)`` (0 when both sides are 0).
        tol: acceptance tolerance.
        passed: whether the check met the tolerance.
    """

    name: str
    lhs: float
    rhs: float
    abs_err: float
    rel_err: float
    tol: float
    passed: bool

    @classmethod
    def from_pair(cls, name, lhs, rhs, tol):
        """Build a report from two values and a tolerance.

        Args:
            name: identity label.
            lhs: computed value.
            rhs: reference value.
            tol: acceptance tolerance applied to absolute OR relative error.

        Returns:
            CheckReport with errors filled in and the pass verdict applied.
        """
        lhs = float(lhs)
        rhs = float(rhs)
        abs_err = abs(lhs - rhs)
        scale = max(abs(lhs), abs(rhs))
        rel_err = abs_err / scale if scale > 0.0 else 0.0
        passed = bool(abs_err <= tol or rel_err <= tol)
        return cls(name=name, lhs=lhs, rhs=rhs, abs_err=abs_err,
                   rel_err=rel_err, tol=float(tol), passed=passed)

    def as_dict(self):
        """Plain-dict form using the serialized key ``"pass"``."""
        return {
            "name": self.name,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "abs_err": self.abs_err,
            "rel_err": self.rel_err,
            "tol": self.tol,
            "pass": self.passed,
        }


# ---------------------------------------------------------------------------
# helpers
# ---------------------------------------------------------------------------

def _scaled_arg(spec, t):
    """The composite argument x = lam * t**nu."""
    return spec.lam * t ** spec.nu


def _pmf_nu1(n, k, x):
    """Order-n count mass at nu=1: sum of Poisson(x) masses on the window
    [n*k, n*k + n - 1], computed in log space."""
    total = 0.0
    for m in range(n * k, n * k + n):
        total += math.exp(-x + m * math.log(x) - sc.gammaln(m + 1)) if x > 0.0 \
            else (1.0 if m == 0 else 0.0)
    return total


def pmf(spec, k, t):
    """Probability of exactly ``k`` counts by time ``t``.

    For order ``n`` the mass is a binomial-weighted sum of generalized
    Mittag-Leffler terms,

        sum_{j=1..n} C(n, j) x**(n*(k+1)-j)
                     * E^{n*(k+1)}_{nu, nu*(n*(k+1)-j)+1}(-x),

    with ``x = lam * t**nu``; for ``n = 1`` this is the single term
    ``x**k * E^{k+1}_{nu, nu*k+1}(-x)``.

    Args:
        spec: process parameters.
        k: count, integer >= 0.
        t: time, >= 0.  ``t = 0`` returns the initial condition (all mass at
            ``k = 0``).

    Returns:
        Probability in [0, 1].

    Raises:
        InvalidParam: bad count or time.
        NumericalInstability: no evaluation route reaches the accuracy target.
    """
    _require(isinstance(spec, ProcessSpec), f"spec must be a ProcessSpec, got {spec!r}")
    k = _check_count(k, "k", minimum=0)
    t = _check_time(t, "t", positive=False)
    if t == 0.0:
        return 1.0 if k == 0 else 0.0
    n, nu = spec.n, spec.nu
    x = _scaled_arg(spec, t)
    if nu == 1.0:
        return min(max(_pmf_nu1(n, k, x), 0.0), 1.0)
    lx = math.log(x)
    delta = float(n * (k + 1))
    total = 0.0
    for j in range(1, n + 1):
        m = n * (k + 1) - j
        log_scale = m * lx + math.log(math.comb(n, j))
        total += _gml_neg(nu, nu * m + 1.0, delta, x, log_scale=log_scale)
    return min(max(total, 0.0), 1.0)


def pmf_decomposition_check(spec, k, t):
    """Check that the order-``n`` mass aggregates ``n`` consecutive order-1
    masses: pmf(n, k, t) vs sum_{j=0..n-1} pmf(1, n*k+j, t).

    Args:
        spec: process parameters with ``n >= 2``.
        k: count, integer >= 0.
        t: time, > 0.

    Returns:
        CheckReport; passes when the absolute difference is below 1e-10.

    Raises:
        InvalidParam: ``n < 2`` or bad arguments.
    """
    _require(isinstance(spec, ProcessSpec), f"spec must be a ProcessSpec, got {spec!r}")
    _require(spec.n >= 2, f"decomposition requires n >= 2, got {spec.n!r}")
    k = _check_count(k, "k", minimum=0)
    t = _check_time(t, "t")
    lhs = pmf(spec, k, t)
    base = ProcessSpec(1, spec.nu, spec.lam)
    rhs = sum(pmf(base, spec.n * k + j, t) for j in range(spec.n))
    return CheckReport.from_pair(
        f"decomposition n={spec.n} k={k} t={t:g}", lhs, rhs, 1e-10)


def waiting_time_pdf(spec, k, t):
    """Density of the arrival time of the ``k``-th counted event.

    Equals ``lam**(n*k) * t**(n*nu*k-1) * E^{n*k}_{nu, n*nu*k}(-lam*t**nu)``.

    Args:
        spec: process parameters.
        k: event index, integer >= 1.
        t: time, > 0.

    Returns:
        Nonnegative density value (units 1/time).

    Raises:
        InvalidParam: bad arguments.
    """
    _require(isinstance(spec, ProcessSpec), f"spec must be a ProcessSpec, got {spec!r}")
    k = _check_count(k, "k", minimum=1)
    t = _check_time(t, "t")
    n, nu = spec.n, spec.nu
    d = n * k
    x = _scaled_arg(spec, t)
    if nu == 1.0:
        # Gamma(d, 1/lam) density, exact in log space.
        return math.exp(d * math.log(x) - x - sc.gammaln(d) - math.log(t))
    log_scale = d * math.log(x) - math.log(t)
    val = _gml_neg(nu, nu * d, float(d), x, log_scale=log_scale)
    return max(val, 0.0)


def waiting_time_cdf(spec, k, t):
    """Distribution function of the arrival time of the ``k``-th counted
    event: ``(lam*t**nu)**(n*k) * E^{n*k}_{nu, n*nu*k+1}(-lam*t**nu)``.

    Args:
        spec: process parameters.
        k: event index, integer >= 1.
        t: time, >= 0 (0 returns 0: no mass at the origin).

    Returns:
        Probability in [0, 1], nondecreasing in ``t``.

    Raises:
        InvalidParam: bad arguments.
    """
    _require(isinstance(spec, ProcessSpec), f"spec must be a ProcessSpec, got {spec!r}")
    k = _check_count(k, "k", minimum=1)
    t = _check_time(t, "t", positive=False)
    if t == 0.0:
        return 0.0
    n, nu = spec.n, spec.nu
    d = n * k
    x = _scaled_arg(spec, t)
    if nu == 1.0:
        return float(sc.gammainc(d, x))
    val = _gml_neg(nu, nu * d + 1.0, float(d), x, log_scale=d * math.log(x))
    return min(max(val, 0.0), 1.0)


def interarrival_pdf(spec, t):
    """Density of one interarrival time of the order-``n`` process (the time
    between consecutive counted events); identical to the first waiting time.

    Args:
        spec: process parameters.
        t: time, > 0.

    Returns:
        Nonnegative density value.

    Raises:
        InvalidParam: bad arguments.
    """
    return waiting_time_pdf(spec, 1, t)


def interarrival_tail_asymptote(spec, t):
    """Leading large-``t`` power-law term of the interarrival density:
    ``n*nu / (lam * Gamma(1-nu) * t**(nu+1))``.

    The prefactor ``n`` follows the pattern established for orders 1 and 2;
    for ``n >= 3`` it is an extrapolation of that pattern and a warning flags
    it as such.  For ``nu = 1`` the density decays exponentially, so there is
    no power-law tail: the function returns 0 and warns.

    Args:
        spec: process parameters.
        t: time, > 0.

    Returns:
        Asymptotic density value (0 for ``nu = 1``).

    Raises:
        InvalidParam: bad arguments.

    Warns:
        NotApplicableWarning: ``nu = 1`` (exponential decay regime).
        ExtrapolationWarning: ``n >= 3`` (prefactor beyond the derived cases).
    """
    _require(isinstance(spec, ProcessSpec), f"spec must be a ProcessSpec, got {spec!r}")
    t = _check_time(t, "t")
    n, nu, lam = spec.n, spec.nu, spec.lam
    if nu == 1.0:
        warnings.warn("no power-law tail at nu=1: interarrival density decays "
                      "exponentially; returning 0", NotApplicableWarning,
                      stacklevel=2)
        return 0.0
    if n >= 3:
        warnings.warn(f"tail prefactor {n}*nu extrapolates the factor-n "
                      "pattern beyond the derived orders 1 and 2",
                      ExtrapolationWarning, stacklevel=2)
    return n * nu * sc.rgamma(1.0 - nu) / (lam * t ** (nu + 1.0))


def pgf(spec, u, t):
    """Probability generating function ``G(u, t) = sum_k u**k pmf(k, t)``.

    Closed forms exist for orders 1 and 2:

        n=1: E_{nu,1}(lam * (u-1) * t**nu)
        n=2: ((sqrt(u)+1) / (2 sqrt(u))) * E_{nu,1}(-lam (1-sqrt(u)) t**nu)
           + ((sqrt(u)-1) / (2 sqrt(u))) * E_{nu,1}(-lam (1+sqrt(u)) t**nu)

    Args:
        spec: process parameters with ``n`` in {1, 2}.
        u: generating-function argument in [1e-12, 1] (the order-2 form is
            singular at ``u = 0``).
        t: time, > 0.

    Returns:
        Value in (0, 1]; exactly 1 at ``u = 1``.

    Raises:
        InvalidParam: order not in {1, 2}, ``u`` outside [1e-12, 1], or bad
            time.
    """
    _require(isinstance(spec, ProcessSpec), f"spec must be a ProcessSpec, got {spec!r}")
    _require(spec.n in (1, 2),
             f"generating function implemented for n in {{1, 2}}, got {spec.n!r}")
    _require(isinstance(u, numbers.Real) and not isinstance(u, bool)
             and math.isfinite(float(u)), f"u must be a finite real, got {u!r}")
    u = float(u)
    _require(1e-12 <= u <= 1.0, f"u must lie in [1e-12, 1], got {u!r}")
    t = _check_time(t, "t")
    nu = spec.nu
    x = _scaled_arg(spec, t)
    if spec.n == 1:
        val = _gml_neg(nu, 1.0, 1.0, x * (1.0 - u))
    else:
        ru = math.sqrt(u)
        lo = _gml_neg(nu, 1.0, 1.0, x * (1.0 - ru))
        hi = _gml_neg(nu, 1.0, 1.0, x * (1.0 + ru))
        val = ((ru + 1.0) * lo + (ru - 1.0) * hi) / (2.0 * ru)
    return min(val, 1.0)


def factorial_moment(spec, r, t):
    """Factorial moment ``E[N (N-1) ... (N-r+1)]`` of the order-1 process:
    ``(lam * t**nu)**r * r! / Gamma(nu*r + 1)``.

    Args:
        spec: process parameters with ``n = 1``.
        r: moment order, integer >= 1.
        t: time, > 0.

    Returns:
        Moment value (``r = 1`` is the mean).

    Raises:
        InvalidParam: order != 1 or bad arguments.
    """
    _require(isinstance(spec, ProcessSpec), f"spec must be a ProcessSpec, got {spec!r}")
    _require(spec.n == 1,
             f"factorial moments implemented for n=1, got n={spec.n!r}")
    r = _check_count(r, "r", minimum=1)
    t = _check_time(t, "t")
    x = _scaled_arg(spec, t)
    return math.exp(r * math.log(x) + sc.gammaln(r + 1.0)
                    - sc.gammaln(spec.nu * r + 1.0))


def renewal_mean(spec, t):
    """Expected number of counted events by time ``t``.

    Order 1: ``lam * t**nu / Gamma(nu+1)``.  Order 2:
    ``(lam*t**nu)**2 * E_{nu, 2*nu+1}(-2*lam*t**nu)``, equivalently
    ``lam*t**nu / (2*Gamma(nu+1)) - (lam*t**nu/2) * E_{nu,nu+1}(-2*lam*t**nu)``.

    Args:
        spec: process parameters with ``n`` in {1, 2}.
        t: time, > 0.

    Returns:
        Mean count, >= 0.

    Raises:
        InvalidParam: order not in {1, 2} or bad arguments.
    """
    _require(isinstance(spec, ProcessSpec), f"spec must be a ProcessSpec, got {spec!r}")
    _require(spec.n in (1, 2),
             f"renewal mean implemented for n in {{1, 2}}, got {spec.n!r}")
    t = _check_time(t, "t")
    nu = spec.nu
    x = _scaled_arg(spec, t)
    if spec.n == 1:
        return x * sc.rgamma(nu + 1.0)
    if nu == 1.0:
        return x / 2.0 - (1.0 - math.exp(-2.0 * x)) / 4.0 if x < 350.0 \
            else x / 2.0 - 0.25
    return _gml_neg(nu, 2.0 * nu + 1.0, 1.0, 2.0 * x,
                    log_scale=2.0 * math.log(x))


def odd_probability_sum(spec, t):
    """Total order-1 mass on odd counts: ``lam*t**nu * E_{nu,nu+1}(-2*lam*t**nu)``.

    Args:
        spec: process parameters with ``n = 1``.
        t: time, > 0.

    Returns:
        Probability in [0, 1/2); tends to 0 as ``t -> 0+``.

    Raises:
        InvalidParam: order != 1 or bad arguments.
    """
    _require(isinstance(spec, ProcessSpec), f"spec must be a ProcessSpec, got {spec!r}")
    _require(spec.n == 1,
             f"odd-count mass implemented for n=1, got n={spec.n!r}")
    t = _check_time(t, "t")
    nu = spec.nu
    x = _scaled_arg(spec, t)
    if nu == 1.0:
        return 0.5 * -math.expm1(-2.0 * x)
    # Evaluate (2x) * E_{nu,nu+1}(-2x) (the cumulative combination, handled
    # stably at any x) and halve it.
    val = _gml_neg(nu, nu + 1.0, 1.0, 2.0 * x,
                   log_scale=math.log(2.0 * x))
    return 0.5 * val


def support_cutoff(spec, t, tail_tol=1e-10):
    """Smallest count ``K`` with ``P{more than K events by t} < tail_tol``.

    The tail mass beyond ``K`` equals the probability that the ``(K+1)``-th
    event has already arrived, so the cutoff grows ``K`` until
    ``waiting_time_cdf(K+1, t) < tail_tol``.

    Args:
        spec: process parameters.
        t: time, > 0.
        tail_tol: tail-mass bound, > 0.

    Returns:
        Integer ``K >= 0``.

    Raises:
        InvalidParam: bad arguments.
        NonConvergence: cutoff exceeds 100000 counts.
    """
    _require(isinstance(spec, ProcessSpec), f"spec must be a ProcessSpec, got {spec!r}")
    t = _check_time(t, "t")
    _require(isinstance(tail_tol, numbers.Real) and 0.0 < float(tail_tol) < 1.0,
             f"tail_tol must lie in (0, 1), got {tail_tol!r}")
    k = 0
    while waiting_time_cdf(spec, k + 1, t) >= tail_tol:
        k = k + 1 + k // 4
        if k > 100000:
            raise NonConvergence(
                f"support cutoff exceeded 100000 counts at t={t!r}; "
                "tail mass decays too slowly for truncation")
    return k
