"""Exact renewal simulation of Mittag-Leffler counting processes.

Interarrival times of the order-1 process are drawn by inverting the
survival function ``S(t) = E_{nu,1}(-lam * t**nu)``: each uniform draw ``u``
is mapped to the ``t`` solving ``1 - S(t) = u`` by bracketing plus bisection
(exact quantile, no tail truncation).  An order-``n`` interarrival is the sum
of ``n`` independent order-1 draws, and a path is the running sum of
interarrivals cut at a horizon.

Reproducibility: a path batch derives one child RNG stream per path from the
root seed (splittable 64-bit seeding; the generator algorithm is PCG64 and is
recorded in exported metadata), so identical configurations reproduce
identical paths byte for byte, independent of the internal batching.
"""

import json
import math
import numbers
from bisect import bisect_right
from dataclasses import dataclass

import numpy as np

from .errors import InvalidParam, RootFindingFailure
from .models import CheckReport, ProcessSpec, pmf
from .special import _ml1_survival_vec

__all__ = [
    "SimConfig",
    "EventPath",
    "RNG_ALGORITHM",
    "sample_interarrival_model1",
    "sample_interarrivals_model1",
    "sample_path",
    "generate_paths",
    "empirical_pmf",
    "poisson_relabel_check",
    "save_paths_jsonl",
    "load_paths_jsonl",
]

#: generator algorithm used for all sampling (recorded in output metadata).
RNG_ALGORITHM = "pcg64"

#: quantile bracket cap, in time units of lam**(-1/nu).
_T_CAP = 1e12

#: relative tolerance of the quantile bisection (on the returned time).
_REL_TOL = 1e-10


def _require(cond, msg):
    if not cond:
        raise InvalidParam(msg)


@dataclass(frozen=True)
class SimConfig:
    """Simulation run parameters.

    Attributes:
        seed: root seed, integer in [0, 2**64).
        n_paths: number of independent paths, >= 1.
        horizon: time horizon of every path, > 0.
    """

    seed: int
    n_paths: int
    horizon: float

    def __post_init__(self):
        _require(isinstance(self.seed, numbers.Integral)
                 and not isinstance(self.seed, bool)
                 and 0 <= self.seed < 2 ** 64,
                 f"seed must be an integer in [0, 2**64), got {self.seed!r}")
        _require(isinstance(self.n_paths, numbers.Integral)
                 and not isinstance(self.n_paths, bool) and self.n_paths >= 1,
                 f"n_paths must be an integer >= 1, got {self.n_paths!r}")
        _require(isinstance(self.horizon, numbers.Real)
                 and math.isfinite(float(self.horizon))
                 and float(self.horizon) > 0.0,
                 f"horizon must be positive and finite, got {self.horizon!r}")
        object.__setattr__(self, "seed", int(self.seed))
        object.__setattr__(self, "n_paths", int(self.n_paths))
        object.__setattr__(self, "horizon", float(self.horizon))


@dataclass(frozen=True)
class EventPath:
    """Event times of one simulated path.

    Attributes:
        horizon: the path's time horizon, > 0.
        events: strictly increasing event times in (0, horizon].
    """

    horizon: float
    events: tuple

    def __post_init__(self):
        _require(isinstance(self.horizon, numbers.Real)
                 and math.isfinite(float(self.horizon))
                 and float(self.horizon) > 0.0,
                 f"horizon must be positive and finite, got {self.horizon!r}")
        events = tuple(float(e) for e in self.events)
        for prev, cur in zip((0.0,) + events, events):
            _require(cur > prev,
                     f"events must be strictly increasing and positive, got {cur!r} after {prev!r}")
        _require(all(e <= float(self.horizon) for e in events),
                 "events must not exceed the horizon")
        object.__setattr__(self, "horizon", float(self.horizon))
        object.__setattr__(self, "events", events)

    def count_at(self, t):
        """Number of events in (0, t]."""
        _require(0.0 <= t <= self.horizon,
                 f"t must lie in [0, horizon], got {t!r}")
        return bisect_right(self.events, t)


# ---------------------------------------------------------------------------
# quantile inversion
# ---------------------------------------------------------------------------

_grid_cache = {}


def _survival_grid(nu):
    """Cached log-spaced bracket grid (x, S(x)) for E_{nu,1}(-x), with x up
    to the bracket cap 10**(12*nu) (the image of _T_CAP under x = lam*t**nu)."""
    if nu not in _grid_cache:
        x_cap = 10.0 ** (12.0 * nu)
        xs = np.geomspace(1e-8, x_cap, 16384)
        sv = _ml1_survival_vec(nu, xs)
        # guard against floating noise breaking strict monotonicity
        sv = np.minimum.accumulate(sv)
        _grid_cache[nu] = (xs, sv)
    return _grid_cache[nu]


def _invert_survival(nu, targets, cap_to_inf=False):
    """Solve E_{nu,1}(-x) = target elementwise.

    Brackets each target in one cell of the cached grid, then closes the
    bracket by the Illinois variant of regula falsi until it is relatively
    tighter than nu * _REL_TOL (which makes the returned time
    t = (x/lam)**(1/nu) accurate to _REL_TOL).  On the narrow grid cells the
    survival function is nearly linear, so a handful of iterations suffice.

    Args:
        nu: index in (0, 1).
        targets: array of survival levels in (0, 1).
        cap_to_inf: when true, targets below the survival value at the
            bracket cap return ``inf`` instead of raising.  Only valid when
            the caller needs nothing beyond "exceeds the cap" (path
            generation with a horizon below the cap), so no tail value is
            ever truncated.

    Returns:
        Array of arguments x >= 0 (``inf`` only under ``cap_to_inf``).

    Raises:
        RootFindingFailure: a target lies below the survival value at the
            bracket cap (the quantile exceeds _T_CAP * lam**(-1/nu)) and
            ``cap_to_inf`` is false.
    """
    targets = np.asarray(targets, dtype=float)
    xs, sv = _survival_grid(nu)
    idx = np.searchsorted(-sv, -targets, side="left")
    over = idx == len(xs)
    if np.any(over):
        if not cap_to_inf:
            raise RootFindingFailure(
                "quantile bracket exceeded its cap of 1e12 * lam**(-1/nu); "
                "the drawn tail value is too extreme to invert")
        out = np.full(targets.shape, np.inf)
        keep = ~over
        if np.any(keep):
            out[keep] = _invert_survival(nu, targets[keep])
        return out
    lo = np.where(idx > 0, xs[np.maximum(idx - 1, 0)], 0.0)
    hi = xs[idx]
    # bracket residuals S(x) - target: positive at lo, negative-or-zero at hi
    f_lo = np.where(idx > 0, sv[np.maximum(idx - 1, 0)], 1.0) - targets
    f_hi = sv[idx] - targets
    side = np.zeros(len(targets), dtype=np.int8)
    for _ in range(80):
        active = (hi - lo) > nu * _REL_TOL * hi
        if not np.any(active):
            break
        a_lo, a_hi = lo[active], hi[active]
        a_flo, a_fhi = f_lo[active], f_hi[active]
        denom = a_flo - a_fhi
        frac = np.where(denom > 0.0, a_flo / np.where(denom > 0.0, denom, 1.0), 0.5)
        frac = np.clip(frac, 1e-3, 1.0 - 1e-3)
        mid = a_lo + frac * (a_hi - a_lo)
        f_mid = _ml1_survival_vec(nu, mid) - targets[active]
        above = f_mid > 0.0
        new_lo = np.where(above, mid, a_lo)
        new_flo = np.where(above, f_mid, a_flo)
        new_hi = np.where(above, a_hi, mid)
        new_fhi = np.where(above, a_fhi, f_mid)
        # Illinois damping: halve the stagnant endpoint's residual when the
        # same side is replaced twice in a row, forcing the bracket shut.
        a_side = side[active]
        new_fhi = np.where(above & (a_side == 1), 0.5 * new_fhi, new_fhi)
        new_flo = np.where(~above & (a_side == -1), 0.5 * new_flo, new_flo)
        lo[active] = new_lo
        hi[active] = new_hi
        f_lo[active] = new_flo
        f_hi[active] = new_fhi
        side[active] = np.where(above, 1, -1)
    return 0.5 * (lo + hi)


def _check_indices(nu, lam):
    _require(isinstance(nu, numbers.Real) and math.isfinite(float(nu))
             and 0.0 < float(nu) <= 1.0, f"nu must lie in (0, 1], got {nu!r}")
    _require(isinstance(lam, numbers.Real) and math.isfinite(float(lam))
             and float(lam) > 0.0, f"lam must be positive, got {lam!r}")
    return float(nu), float(lam)


def sample_interarrivals_model1(nu, lam, rng, size):
    """Draw ``size`` independent order-1 interarrival times (vectorized).

    Args:
        nu: index in (0, 1].
        lam: rate, > 0.
        rng: generator with a ``random(size)`` method.
        size: number of draws, >= 1.

    Returns:
        Array of positive times.

    Raises:
        InvalidParam: bad parameters.
        RootFindingFailure: a draw's quantile exceeds 1e12 * lam**(-1/nu).
    """
    nu, lam = _check_indices(nu, lam)
    _require(isinstance(size, numbers.Integral) and size >= 1,
             f"size must be an integer >= 1, got {size!r}")
    u = np.asarray(rng.random(int(size)), dtype=float)
    # rng.random() lives in [0, 1); map an exact 0 to the smallest positive
    # draw so interarrival times stay strictly positive.
    u[u == 0.0] = 2.0 ** -53
    if nu == 1.0:
        return -np.log1p(-u) / lam
    x = _invert_survival(nu, 1.0 - u)
    return (x / lam) ** (1.0 / nu)


def sample_interarrival_model1(nu, lam, rng):
    """Draw one order-1 interarrival time by exact quantile inversion.

    Draws ``u ~ Uniform(0, 1)`` and returns the ``t`` solving
    ``1 - E_{nu,1}(-lam * t**nu) = u``, to relative tolerance 1e-10; for
    ``nu = 1`` the quantile is the closed form ``-ln(1-u)/lam``.

    Args:
        nu: index in (0, 1].
        lam: rate, > 0.
        rng: generator with a ``random()`` method.

    Returns:
        Positive time.

    Raises:
        InvalidParam: bad parameters.
        RootFindingFailure: the quantile exceeds 1e12 * lam**(-1/nu).
    """
    nu, lam = _check_indices(nu, lam)
    u = float(rng.random())
    if u == 0.0:
        u = 2.0 ** -53
    if nu == 1.0:
        return -math.log1p(-u) / lam
    x = _invert_survival(nu, np.array([1.0 - u]))[0]
    return float((x / lam) ** (1.0 / nu))


# ---------------------------------------------------------------------------
# path generation
# ---------------------------------------------------------------------------

def _next_event_times(spec, times, u, horizon):
    """Advance each running time by one order-n interarrival built from the
    uniform block ``u`` of shape (len(times), n).

    When the horizon sits below the quantile bracket cap, a component draw
    beyond the cap is replaced by ``inf``: the event then certainly falls
    past the horizon, which is all the path needs to know, and no tail value
    is truncated.
    """
    if spec.nu == 1.0:
        gaps = (-np.log1p(-u) / spec.lam).sum(axis=1)
    else:
        allow_inf = horizon < _T_CAP * spec.lam ** (-1.0 / spec.nu)
        x = _invert_survival(spec.nu, (1.0 - u).ravel(), cap_to_inf=allow_inf)
        gaps = ((x / spec.lam) ** (1.0 / spec.nu)).reshape(u.shape).sum(axis=1)
    new = times + gaps
    # A gap can be so small that it vanishes in the running float sum; nudge
    # by one ulp so event times stay strictly increasing.
    stuck = new <= times
    if np.any(stuck):
        new[stuck] = np.nextafter(times[stuck], np.inf)
    return new


def sample_path(spec, config, rng):
    """Simulate one path: running sums of order-n interarrivals up to the
    horizon.

    Args:
        spec: process parameters.
        config: run parameters (only the horizon is used here; the caller
            owns the generator and its seeding).
        rng: generator with a ``random(size)`` method.

    Returns:
        EventPath with every event time in (0, horizon].

    Raises:
        InvalidParam: bad parameters.
        RootFindingFailure: propagated from a quantile draw.
    """
    _require(isinstance(spec, ProcessSpec), f"spec must be a ProcessSpec, got {spec!r}")
    _require(isinstance(config, SimConfig), f"config must be a SimConfig, got {config!r}")
    horizon = config.horizon
    events = []
    times = np.zeros(1)
    while True:
        u = np.asarray(rng.random(spec.n), dtype=float).reshape(1, spec.n)
        u[u == 0.0] = 2.0 ** -53
        times = _next_event_times(spec, times, u, horizon)
        if times[0] > horizon:
            break
        events.append(float(times[0]))
    return EventPath(horizon=horizon, events=tuple(events))


def generate_paths(spec, config):
    """Simulate all paths of a configuration, one split RNG stream per path.

    Path ``i`` consumes the ``i``-th child stream of the root seed, so the
    result is reproducible byte for byte and identical to calling
    :func:`sample_path` with that child generator.

    Args:
        spec: process parameters.
        config: run parameters.

    Returns:
        List of ``config.n_paths`` EventPath objects.

    Raises:
        InvalidParam: bad parameters.
        RootFindingFailure: propagated from a quantile draw.
    """
    _require(isinstance(spec, ProcessSpec), f"spec must be a ProcessSpec, got {spec!r}")
    _require(isinstance(config, SimConfig), f"config must be a SimConfig, got {config!r}")
    children = np.random.SeedSequence(config.seed).spawn(config.n_paths)
    gens = [np.random.Generator(np.random.PCG64(c)) for c in children]
    horizon = config.horizon
    n = spec.n
    n_paths = config.n_paths
    times = np.zeros(n_paths)
    events = [[] for _ in range(n_paths)]
    active = np.arange(n_paths)
    while active.size:
        u = np.empty((active.size, n))
        for row, i in enumerate(active):
            u[row] = gens[i].random(n)
        u[u == 0.0] = 2.0 ** -53
        new_times = _next_event_times(spec, times[active], u, horizon)
        times[active] = new_times
        alive = new_times <= horizon
        for row in np.nonzero(alive)[0]:
            events[active[row]].append(float(new_times[row]))
        active = active[alive]
    return [EventPath(horizon=horizon, events=tuple(ev)) for ev in events]


# ---------------------------------------------------------------------------
# estimators
# ---------------------------------------------------------------------------

def empirical_pmf(paths, t):
    """Fraction of paths with exactly ``k`` events in (0, t], for each ``k``.

    Args:
        paths: nonempty list of EventPath objects.
        t: probe time, 0 <= t <= every path's horizon.

    Returns:
        Array ``masses`` with ``masses[k]`` the fraction of paths counting
        ``k`` events; the underlying counts sum to ``len(paths)`` exactly.

    Raises:
        InvalidParam: empty path list or probe beyond a horizon.
    """
    _require(len(paths) > 0, "paths must be a nonempty list of EventPath")
    _require(all(isinstance(p, EventPath) for p in paths),
             "paths must contain EventPath objects")
    _require(isinstance(t, numbers.Real) and math.isfinite(float(t))
             and float(t) >= 0.0, f"t must be a finite time >= 0, got {t!r}")
    t = float(t)
    _require(all(t <= p.horizon for p in paths),
             f"t must not exceed any path horizon, got {t!r}")
    counts = np.array([p.count_at(t) for p in paths])
    return np.bincount(counts) / float(len(paths))


def poisson_relabel_check(lam, horizon, config, rng):
    """Simulate classical unit-index paths and check that halved counts
    follow the order-2 classical mass function.

    Each path's count ``N`` at the horizon is relabeled ``floor(N/2)`` (an
    order-2 event fires on every second arrival) and the relabeled histogram
    is compared with ``pmf(n=2, nu=1)`` bin by bin.  The report carries the
    worst bin, with tolerance three binomial standard errors; only bins with
    expected count >= 25 enter the comparison.

    Args:
        lam: rate, > 0.
        horizon: probe time, > 0 (overrides ``config.horizon``).
        config: supplies ``n_paths``.
        rng: generator for the exponential draws.

    Returns:
        CheckReport for the worst bin.

    Raises:
        InvalidParam: bad parameters.
    """
    _require(isinstance(config, SimConfig), f"config must be a SimConfig, got {config!r}")
    _, lam = _check_indices(1.0, lam)
    _require(isinstance(horizon, numbers.Real) and math.isfinite(float(horizon))
             and float(horizon) > 0.0,
             f"horizon must be positive and finite, got {horizon!r}")
    horizon = float(horizon)
    n_paths = config.n_paths
    mean = lam * horizon
    block = int(mean + 10.0 * math.sqrt(mean) + 20.0)
    gaps = rng.exponential(1.0 / lam, size=(n_paths, block))
    arrivals = np.cumsum(gaps, axis=1)
    counts = (arrivals <= horizon).sum(axis=1)
    # paths that filled the whole block may have further arrivals
    for i in np.nonzero(counts == block)[0]:
        t_i = arrivals[i, -1]
        while t_i <= horizon:
            t_i += rng.exponential(1.0 / lam)
            if t_i <= horizon:
                counts[i] += 1
    relabeled = counts // 2
    emp = np.bincount(relabeled) / float(n_paths)
    spec2 = ProcessSpec(2, 1.0, lam)
    worst = None
    for k in range(len(emp) + 2):
        p = pmf(spec2, k, horizon)
        if n_paths * p < 25.0:
            continue
        e = emp[k] if k < len(emp) else 0.0
        sigma = math.sqrt(p * (1.0 - p) / n_paths)
        z = abs(e - p) / sigma if sigma > 0 else 0.0
        if worst is None or z > worst[0]:
            worst = (z, k, e, p, sigma)
    if worst is None:  # degenerate horizon: all mass at k=0
        e = emp[0] if len(emp) else 0.0
        p = pmf(spec2, 0, horizon)
        worst = (abs(e - p) * 1e16, 0, e, p, 1e-16)
    z, k, e, p, sigma = worst
    return CheckReport.from_pair(
        f"poisson-relabel lam={lam:g} t={horizon:g} worst-bin k={k}",
        e, p, 3.0 * sigma)


# ---------------------------------------------------------------------------
# path export
# ---------------------------------------------------------------------------

def save_paths_jsonl(paths, file_path):
    """Write paths as JSON lines: one object per path with its stream index,
    horizon, and event times.

    Args:
        paths: list of EventPath objects.
        file_path: destination path.
    """
    _require(all(isinstance(p, EventPath) for p in paths),
             "paths must contain EventPath objects")
    with open(file_path, "w", encoding="utf-8") as fh:
        for i, p in enumerate(paths):
            fh.write(json.dumps({"seed_stream": i,
                                 "horizon": p.horizon,
                                 "events": list(p.events)}) + "\n")


def load_paths_jsonl(file_path):
    """Read paths written by :func:`save_paths_jsonl`.

    Args:
        file_path: source path.

    Returns:
        List of EventPath objects in stream order.

    Raises:
        InvalidParam: malformed records.
    """
    records = []
    with open(file_path, "r", encoding="utf-8") as fh:
        for line in fh:
            line = line.strip()
            if not line:
                continue
            obj = json.loads(line)
            _require(isinstance(obj, dict) and "events" in obj
                     and "horizon" in obj and "seed_stream" in obj,
                     f"malformed path record: {line[:80]!r}")
            records.append(obj)
    records.sort(key=lambda r: r["seed_stream"])
    return [EventPath(horizon=r["horizon"], events=tuple(r["events"]))
            for r in records]
