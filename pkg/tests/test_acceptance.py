"""Acceptance suite: fourteen end-to-end criteria, one line of output each.

Every criterion prints ``criterion NN PASS/FAIL - <label>`` so a full run
reads as a checklist.  Two ways to run it:

    python3 -m pytest tests/test_acceptance.py -s     (as tests)
    python3 tests/test_acceptance.py                  (standalone checklist)

The standalone runner executes every criterion even after a failure and
exits nonzero if any failed.  All checks are deterministic: random
parameter samples and Monte Carlo runs use fixed seeds.
"""

import math
import sys
import time

import numpy as np

from fracpois import (
    GridSpec,
    MLSpec,
    ProcessSpec,
    SimConfig,
    caputo_residual,
    empirical_pmf,
    factorial_moment,
    generate_paths,
    gml_series,
    interarrival_pdf,
    interarrival_tail_asymptote,
    m_wright_kernel,
    ml_series,
    ml2_neg_integral,
    ml_large_t_approx,
    ml_neg_integral,
    ml_transform_check,
    pgf,
    pmf,
    pmf_decomposition_check,
    poisson_relabel_check,
    renewal_mean,
    subordination_pmf,
    support_cutoff,
    verify_transform_pairs,
)
from fracpois.special import _gml_neg


def _report(num, label, ok):
    """Print the criterion's checklist line, then assert it."""
    print(f"criterion {num:2d} {'PASS' if ok else 'FAIL'} - {label}")
    assert ok, f"criterion {num} failed: {label}"


def test_01_closed_form_collapse():
    """alpha=1 three-parameter values collapse to Poisson masses."""
    worst = 0.0
    for x in (0.1, 0.5, 1.0, 2.0, 5.0, 10.0):
        for k in range(11):
            got = gml_series(MLSpec(1.0, k + 1.0, k + 1.0), -x)
            want = math.exp(-x) / math.factorial(k)
            worst = max(worst, abs(got / want - 1.0))
    _report(1, f"closed-form collapse at unit order, k <= 10 "
               f"(worst rel {worst:.1e}, tol 1e-12)", worst <= 1e-12)


def test_02_lowering_recurrence():
    """Upper-index lowering recurrence on a 100-point random sample."""
    rng = np.random.default_rng(20260818)
    worst = 0.0
    for _ in range(100):
        nu = rng.uniform(0.4, 0.95)
        x = rng.uniform(0.05, 1.5)
        m = int(rng.integers(1, 5))
        beta = rng.uniform(0.3, 2.5)
        if m == 1:
            lhs = 1.0 / math.gamma(beta)
        else:
            lhs = gml_series(MLSpec(nu, beta, m - 1), -x)
        rhs = (gml_series(MLSpec(nu, beta, m), -x)
               + x * gml_series(MLSpec(nu, beta + nu, m), -x))
        worst = max(worst, abs(lhs - rhs))
    _report(2, f"upper-index lowering recurrence, 100 random points "
               f"(worst {worst:.1e}, tol 1e-10)", worst <= 1e-10)


def _grid_nx():
    for n in (1, 2, 3):
        for nu in (0.3, 0.5, 0.7, 1.0):
            for x in (0.5, 2.0, 5.0):
                yield n, nu, x ** (1.0 / nu)


def test_03_normalization():
    """Counting masses sum to one with adaptive support cutoff."""
    worst = 0.0
    overshoot = 0.0
    for n, nu, t in _grid_nx():
        spec = ProcessSpec(n, nu, 1.0)
        cutoff = support_cutoff(spec, t, tail_tol=1e-12)
        total = sum(pmf(spec, k, t) for k in range(cutoff + 1))
        worst = max(worst, abs(total - 1.0))
        overshoot = max(overshoot, total - 1.0)
    _report(3, f"pmf normalization over 36 parameter points "
               f"(worst |sum-1| {worst:.1e}, tol 1e-8; "
               f"overshoot {overshoot:.1e}, tol 1e-10)",
            worst <= 1e-8 and overshoot <= 1e-10)


def test_04_telescoping():
    """Masses equal consecutive waiting-time CDF differences."""
    from fracpois import waiting_time_cdf
    worst = 0.0
    for n, nu, t in _grid_nx():
        spec = ProcessSpec(n, nu, 1.0)
        for k in (0, 1, 3):
            upper = waiting_time_cdf(spec, k + 1, t)
            lower = 1.0 if k == 0 else waiting_time_cdf(spec, k, t)
            worst = max(worst, abs((lower - upper) - pmf(spec, k, t)))
    _report(4, f"pmf equals waiting-CDF telescoping difference "
               f"(worst {worst:.1e}, tol 1e-10)", worst <= 1e-10)


def test_05_order_decomposition():
    """Order-n masses aggregate n consecutive order-1 masses."""
    worst = 0.0
    for n in (2, 3):
        for nu in (0.5, 0.7):
            for x in (1.0, 3.0):
                t = x ** (1.0 / nu)
                for k in (0, 1, 2):
                    rep = pmf_decomposition_check(ProcessSpec(n, nu, 1.0),
                                                  k, t)
                    worst = max(worst, rep.abs_err)
    _report(5, f"order-n to order-1 mass decomposition, n in {{2,3}} "
               f"(worst {worst:.1e}, tol 1e-10)", worst <= 1e-10)


def test_06_laplace_transform_pairs():
    """Forward quadrature matches all rational transform pairs."""
    reports = []
    for n in (1, 2, 3):
        reports.extend(verify_transform_pairs(ProcessSpec(n, 0.5, 1.0)))
    for nu, gamma, delta in ((0.6, 1.0, 2.0), (0.5, 1.5, 2.5)):
        for s in (1.3, 2.0, 3.0, 5.0, 8.0):
            reports.append(ml_transform_check(nu, gamma, delta, 1.0, s))
    worst = max(rep.abs_err for rep in reports)
    ok = all(rep.passed for rep in reports) and len(reports) == 110
    _report(6, f"transform pairs: count/waiting/interarrival/renewal + "
               f"weighted kernel, {len(reports)} checks at 5 s-points "
               f"(worst {worst:.1e}, tol 1e-6)", ok)


def test_07_subordination_quadrature():
    """Mass via random-clock kernel quadrature matches the direct route."""
    worst = 0.0
    for nu in (0.3, 0.5, 0.7):
        for t in (0.5, 1.0, 2.0):
            for k in range(6):
                quad_val = subordination_pmf(k, nu, 1.0, t)
                direct = pmf(ProcessSpec(1, nu, 1.0), k, t)
                worst = max(worst, abs(quad_val - direct))
    gauss_dev = max(
        abs(m_wright_kernel(0.5, z) - math.exp(-z * z / 4.0)
            / math.sqrt(math.pi))
        for z in (0.1, 0.7, 1.9, 3.3))
    _report(7, f"subordination quadrature, k <= 5 (worst {worst:.1e}, "
               f"tol 1e-7; half-order kernel is the exact Gaussian, "
               f"dev {gauss_dev:.1e})", worst <= 1e-7 and gauss_dev <= 1e-12)


def test_08_integral_routes_and_asymptotics():
    """Negative-axis integral routes match series; large-t bands hold."""
    worst = 0.0
    for nu in (0.3, 0.5, 0.7, 0.9):
        for t in (0.1, 1.0, 5.0):
            x = t ** nu
            worst = max(
                worst,
                abs(ml_neg_integral(nu, t) - ml_series(nu, 1.0, -x)),
                abs(ml2_neg_integral(nu, 0.8, t) - ml_series(nu, 0.8, -x)),
                abs(ml2_neg_integral(nu, nu, t) - ml_series(nu, nu, -x)))
    bands_ok = True
    worst_band = 0.0
    for nu in (0.5, 0.7):
        for beta in (1.0, nu):
            for t, band in ((100.0, 0.10), (1000.0, 0.03)):
                if beta == 1.0:
                    accurate = ml_neg_integral(nu, t)
                else:
                    accurate = ml2_neg_integral(nu, beta, t)
                rel = abs(accurate / ml_large_t_approx(nu, beta, t) - 1.0)
                worst_band = max(worst_band, rel / band)
                bands_ok = bands_ok and rel <= band
    _report(8, f"integral vs series routes (worst {worst:.1e}, tol 1e-8); "
               f"large-t bands 10% at t=100, 3% at t=1000 "
               f"(worst band use {worst_band:.0%})",
            worst <= 1e-8 and bands_ok)


def test_09_interarrival_tails_and_origin():
    """Power-law tail ratio bands and near-origin regimes."""
    ratios = []
    for n in (1, 2):
        spec = ProcessSpec(n, 0.5, 1.0)
        ratios.append(interarrival_pdf(spec, 200.0)
                      / interarrival_tail_asymptote(spec, 200.0))
    tails_ok = all(0.95 <= r <= 1.05 for r in ratios)
    t0 = 1e-6
    diverging = interarrival_pdf(ProcessSpec(2, 0.3, 1.0), t0)
    finite = [interarrival_pdf(ProcessSpec(2, 0.5, lam), t0) / lam ** 2
              for lam in (1.0, 1.2)]
    vanishing = interarrival_pdf(ProcessSpec(2, 0.7, 1.0), t0)
    origin_ok = (diverging > 100.0
                 and all(abs(f - 1.0) <= 0.01 for f in finite)
                 and vanishing < 0.01)
    _report(9, f"interarrival tail ratios at t=200 in [0.95, 1.05] "
               f"(got {ratios[0]:.3f}, {ratios[1]:.3f}); order-2 origin "
               f"regimes at t=1e-6 (diverging/lambda^2/vanishing)",
            tails_ok and origin_ok)


def test_10_monte_carlo():
    """Empirical masses and means from 1e5 paths; relabeling check."""
    start = time.time()
    horizon = 1.0
    n_paths = 100_000
    ok = True
    worst_z = 0.0
    for (n, nu), seed in (((1, 0.5), 9001), ((1, 1.0), 9002),
                          ((2, 0.6), 9003), ((2, 1.0), 9004)):
        spec = ProcessSpec(n, nu, 1.0)
        config = SimConfig(seed=seed, n_paths=n_paths, horizon=horizon)
        paths = generate_paths(spec, config)
        masses = empirical_pmf(paths, horizon)
        checked = 0
        for k, emp in enumerate(masses):
            prob = pmf(spec, k, horizon)
            if n_paths * prob < 25.0:
                continue
            se = math.sqrt(prob * (1.0 - prob) / n_paths)
            worst_z = max(worst_z, abs(emp - prob) / se)
            checked += 1
        ok = ok and checked >= 4 and worst_z <= 3.0
        counts = np.array([p.count_at(horizon) for p in paths], dtype=float)
        mean_se = counts.std(ddof=1) / math.sqrt(n_paths)
        mean_z = abs(counts.mean() - renewal_mean(spec, horizon)) / mean_se
        worst_z = max(worst_z, mean_z)
        ok = ok and mean_z <= 3.0
    relabel_config = SimConfig(seed=515, n_paths=40_000, horizon=4.0)
    relabel = poisson_relabel_check(1.0, 4.0, relabel_config,
                                    np.random.default_rng(515))
    elapsed = time.time() - start
    ok = ok and relabel.passed and elapsed < 120.0
    _report(10, f"Monte Carlo 1e5 paths, 4 models: all bins and means "
                f"within 3 sigma (worst z {worst_z:.2f}); classical "
                f"relabeling passed={relabel.passed}; {elapsed:.0f}s < 120s",
            ok)


def test_11_caputo_residual_refinement():
    """Discretized memory-derivative residual shrinks under refinement."""
    grid = GridSpec(0.1, 1.0, 16)
    worst_ratio = 0.0
    ok = True
    for n in (1, 2, 3):
        for nu in (0.5, 0.75):
            for k in (0, 1, 2):
                rep = caputo_residual(ProcessSpec(n, nu, 1.0), k, grid)
                ok = ok and rep.passed
                worst_ratio = max(worst_ratio, rep.lhs)
    _report(11, f"governing-equation residual decreases >= 25% per grid "
                f"halving, 3 refinements, 18 cases (worst ratio "
                f"{worst_ratio:.2f} <= 0.75)", ok)


def test_12_factorial_moments():
    """Closed-form falling-factorial moments match pmf-weighted sums."""
    worst = 0.0
    for nu, lam, t in ((0.6, 1.0, 1.2), (0.5, 1.0, 2.0), (0.85, 1.3, 1.0)):
        spec = ProcessSpec(1, nu, lam)
        cutoff = support_cutoff(spec, t, tail_tol=1e-14)
        masses = [pmf(spec, k, t) for k in range(cutoff + 1)]
        for r in (1, 2, 3):
            direct = factorial_moment(spec, r, t)
            weighted = sum(
                math.prod(range(k - r + 1, k + 1)) * masses[k]
                for k in range(r, cutoff + 1))
            worst = max(worst, abs(direct - weighted) / direct)
    _report(12, f"falling-factorial moments r in {{1,2,3}} vs weighted "
                f"sums (worst rel {worst:.1e}, tol 1e-7)", worst <= 1e-7)


def test_13_binomial_partial_sum_identity():
    """Alternating binomial partial sums, exact integer arithmetic."""
    ok = all(
        math.comb(j - 1, k - 1) * (-1) ** k
        == sum(math.comb(j, m) * (-1) ** m for m in range(k, j + 1))
        for k in range(1, 31) for j in range(k, 31))
    _report(13, "alternating binomial partial-sum identity, exact for "
                "j, k <= 30", ok)


def test_14_generating_function_identities():
    """pgf closed forms match mass-weighted power sums; pgf(1) = 1."""
    worst = 0.0
    for n in (1, 2):
        for nu in (0.6, 0.8):
            spec = ProcessSpec(n, nu, 1.0)
            t = 1.3
            cutoff = support_cutoff(spec, t, tail_tol=1e-15)
            masses = [pmf(spec, k, t) for k in range(cutoff + 1)]
            for u in (0.2, 0.6, 0.9):
                power_sum = sum(u ** k * mk for k, mk in enumerate(masses))
                worst = max(worst, abs(pgf(spec, u, t) - power_sum))
    at_one = max(abs(pgf(ProcessSpec(n, 0.6, 1.0), 1.0, 1.1) - 1.0)
                 for n in (1, 2))
    ml_dev = 0.0
    for nu in (0.5, 0.7):
        for t in (0.8, 1.5):
            for u in (0.2, 0.6, 0.9):
                closed = _gml_neg(nu, 1.0, 1.0, (1.0 - u) * t ** nu)
                ml_dev = max(ml_dev, abs(pgf(ProcessSpec(1, nu, 1.0), u, t)
                                         - closed))
    ok = worst <= 1e-9 and ml_dev <= 1e-9 and at_one <= 1e-12
    _report(14, f"generating function vs power sums, orders 1 and 2 "
                f"(worst {worst:.1e}, tol 1e-9); closed one-parameter form "
                f"(dev {ml_dev:.1e}); pgf(1)=1 (dev {at_one:.1e})", ok)


_CRITERIA = (
    (1, test_01_closed_form_collapse),
    (2, test_02_lowering_recurrence),
    (3, test_03_normalization),
    (4, test_04_telescoping),
    (5, test_05_order_decomposition),
    (6, test_06_laplace_transform_pairs),
    (7, test_07_subordination_quadrature),
    (8, test_08_integral_routes_and_asymptotics),
    (9, test_09_interarrival_tails_and_origin),
    (10, test_10_monte_carlo),
    (11, test_11_caputo_residual_refinement),
    (12, test_12_factorial_moments),
    (13, test_13_binomial_partial_sum_identity),
    (14, test_14_generating_function_identities),
)


def main():
    """Run every criterion, print the checklist, exit 1 on any failure."""
    failures = 0
    for num, criterion in _CRITERIA:
        try:
            criterion()
        except AssertionError:
            failures += 1
        except Exception as exc:  # a criterion died before reporting
            print(f"criterion {num:2d} FAIL - unexpected error: {exc}")
            failures += 1
    total = len(_CRITERIA)
    print(f"{total - failures}/{total} acceptance criteria passed")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
