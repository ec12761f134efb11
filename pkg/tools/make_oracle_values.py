"""Generate high-precision oracle values frozen into the test suite.

Every reference constant in tests/ marked "oracle" is produced here with
mpmath at 50-300 digits (working precision auto-scaled to the worst term
magnitude of the alternating series, so catastrophic cancellation in the
partial sums is absorbed by extra digits, never by float tricks).

Run:  python tools/make_oracle_values.py
Requires mpmath (dev-only dependency; the shipped package never imports it).
"""

import math

import mpmath as mp


def _max_term_log10(log_term):
    """Scan r for the largest log10 |term| of a series (float estimate).

    Args:
        log_term: callable r -> log10 of |term_r| (may return -inf).

    Returns:
        Max over a generous r grid, floored at 0.
    """
    best = 0.0
    for r in range(0, 20001, 1 if True else 1):
        v = log_term(r)
        if v > best:
            best = v
        # terms of all series used here decay monotonically once past the
        # peak by a factorial margin; stop once far below the running max
        if v < best - 60 and r > 50:
            break
    return best


def _sum_series(term_fn, log_term, value_floor_log10=-30):
    """Sum term_fn(r) with mpmath at precision adapted to cancellation.

    Args:
        term_fn: callable r -> mp term value (computed at current mp.dps).
        log_term: float estimate of log10 |term_r| (for dps selection).
        value_floor_log10: assume |sum| >= 10**this for digit budgeting.

    Returns:
        mpf partial sum, converged to ~30 significant digits.
    """
    peak = _max_term_log10(log_term)
    mp.mp.dps = int(60 + peak - value_floor_log10)
    s = mp.mpf(0)
    small = 0
    r = 0
    while True:
        t = term_fn(r)
        s += t
        if abs(t) < mp.mpf(10) ** (-(mp.mp.dps - 8)) * max(abs(s), mp.mpf(1)):
            small += 1
            if small >= 8 and r > 4:
                break
        else:
            small = 0
        r += 1
        if r > 200000:
            raise RuntimeError("series did not settle")
    return s


def gml(alpha, beta, gamma, x):
    """Three-parameter Mittag-Leffler sum_r (gamma)_r x^r / (r! G(alpha r + beta))."""
    a, b, g, xx = map(mp.mpf, (alpha, beta, gamma, x))

    def log_term(r):
        return (
            (math.lgamma(gamma + r) - math.lgamma(gamma) - math.lgamma(r + 1)
             - math.lgamma(alpha * r + beta)) / math.log(10)
            + r * math.log10(abs(x)) if x != 0 else (0 if r == 0 else -1e9)
        )

    def term(r):
        return (mp.gamma(g + r) / mp.gamma(g) / mp.gamma(r + 1)
                / mp.gamma(a * r + b) * xx ** r)

    return _sum_series(term, log_term)


def wright(lam, beta, x):
    """Wright function sum_k x^k / (k! G(lam k + beta)); lam may be negative."""
    l, b, xx = map(mp.mpf, (lam, beta, x))

    def log_term(r):
        z = lam * r + beta
        # 1/Gamma at nonpositive z: use reflection |1/G(z)| <= G(1-z)/pi
        if z > 1e-8:
            lg = -math.lgamma(z)
        else:
            lg = math.lgamma(1 - z) - math.log(math.pi)
        return (lg - math.lgamma(r + 1)) / math.log(10) + (
            r * math.log10(abs(x)) if x != 0 else (0 if r == 0 else -1e9))

    def term(r):
        return xx ** r / mp.gamma(r + 1) * mp.rgamma(l * r + b)

    return _sum_series(term, log_term)


def pmf1(nu, x, k):
    """First-model pmf via the alternating binomial series
    sum_{r>=k} C(r,k) (-1)^(r-k) x^r / G(nu r + 1)  (independent of the
    three-parameter-function route used by the implementation)."""
    n, xx = mp.mpf(nu), mp.mpf(x)

    def log_term(r):
        rr = r + k
        return (
            (math.lgamma(rr + 1) - math.lgamma(k + 1) - math.lgamma(rr - k + 1)
             - math.lgamma(nu * rr + 1)) / math.log(10)
            + rr * math.log10(abs(x))
        )

    def term(r):
        rr = r + k
        return (mp.binomial(rr, k) * (-1) ** (rr - k) * xx ** rr
                / mp.gamma(n * rr + 1))

    return _sum_series(term, log_term)


def show(name, value):
    v = mp.mpf(value)
    print(f"{name} = {mp.nstr(v, 17)}  # {mp.nstr(v, 25)}")


def main():
    print("# --- special-function anchors ---")
    show("GML_07_14_25_M08", gml(0.7, 1.4, 2.5, -0.8))
    show("ML_05_1_M1", gml(0.5, 1.0, 1.0, -1.0))
    show("ML_05_05_M1", gml(0.5, 0.5, 1.0, -1.0))
    show("ML_05_1_M10", gml(0.5, 1.0, 1.0, -10.0))
    show("ML_05_1_M05", gml(0.5, 1.0, 1.0, -0.5))
    show("ML_03_1_M5", gml(0.3, 1.0, 1.0, -5.0))
    show("ML_05_1_M12", gml(0.5, 1.0, 1.0, -12.0))
    show("ML_03_1_M5P03", gml(0.3, 1.0, 1.0, -(5.0 ** 0.3)))
    show("ML_07_1_M2P07", gml(0.7, 1.0, 1.0, -(2.0 ** 0.7)))
    show("ML_09_1_M5P09", gml(0.9, 1.0, 1.0, -(5.0 ** 0.9)))
    show("ML_05_09_M03P05", gml(0.5, 0.9, 1.0, -(0.3 ** 0.5)))
    show("ML_07_07_M2P07", gml(0.7, 0.7, 1.0, -(2.0 ** 0.7)))
    show("ML_09_12_M15", gml(0.9, 1.2, 1.0, -1.5))
    show("ML_05_2_M2", gml(0.5, 2.0, 1.0, -2.0))
    show("ML_05_15_M2", gml(0.5, 1.5, 1.0, -2.0))
    print("# --- three-parameter anchors (integral-route stress) ---")
    show("GML_03_40_11_M5", gml(0.3, 4.0, 11.0, -5.0))
    show("GML_07_85_12_M4", gml(0.7, 8.5, 12.0, -4.0))
    show("GML_05_15_2_M12", gml(0.5, 1.5, 2.0, -12.0))
    show("GML_05_23_3_M25", gml(0.5, 2.3, 3.0, -2.5))
    show("GML_05_2_2_M2", gml(0.5, 2.0, 2.0, -2.0))
    show("GML_07_14_2_M2P07", gml(0.7, 1.4, 2.0, -(2.0 ** 0.7)))
    show("GML_07_24_2_M2P07", gml(0.7, 2.4, 2.0, -(2.0 ** 0.7)))
    show("GML_06_12_2_M1", gml(0.6, 1.2, 2.0, -1.0))
    print("# --- Wright anchors ---")
    show("W_M03_07_M2", wright(-0.3, 0.7, -2.0))
    show("W_M05_05_M1", wright(-0.5, 0.5, -1.0))
    show("W_05_05_M1", wright(0.5, 0.5, -1.0))
    show("W_03_07_M2P03", wright(0.3, 0.7, -(2.0 ** 0.3)))
    show("W_05_05_M50P05", wright(0.5, 0.5, -(50.0 ** 0.5)))
    print("# --- M-Wright kernel anchors: MW(nu, z) = W(-nu, 1-nu, -z) ---")
    for z in (0.5, 2.0, 5.0, 8.0, 12.0):
        show(f"MW_03_Z{str(z).replace('.', 'P')}", wright(-0.3, 0.7, -z))
    for z in (0.5, 1.5, 3.0, 4.5):
        show(f"MW_07_Z{str(z).replace('.', 'P')}", wright(-0.7, 0.3, -z))
    print("# --- first-model pmf anchors (independent binomial route) ---")
    for k in range(4):
        show(f"PMF1_05_X1_K{k}", pmf1(0.5, 1.0, k))
    show("PMF1_03_X1_K0", pmf1(0.3, 1.0, 0))
    show("PMF1_03_X1_K2", pmf1(0.3, 1.0, 2))
    show("PMF1_07_X2T15_K1", pmf1(0.7, 2.0 * 1.5 ** 0.7, 1))
    show("PMF1_05_XSQRT2_K3", pmf1(0.5, 2.0 ** 0.5, 3))
    print("# --- second/third-model pmf anchors via decomposition ---")
    for k in range(3):
        show(f"PMF2_06_X1_K{k}", pmf1(0.6, 1.0, 2 * k) + pmf1(0.6, 1.0, 2 * k + 1))
    for k in range(2):
        show(f"PMF3_05_X1_K{k}",
             pmf1(0.5, 1.0, 3 * k) + pmf1(0.5, 1.0, 3 * k + 1)
             + pmf1(0.5, 1.0, 3 * k + 2))
    print("# --- pgf anchor: second model, nu=0.7, u=0.5, lambda=1, t=3 ---")
    su = mp.sqrt(mp.mpf("0.5"))
    t_nu = mp.mpf(3) ** mp.mpf("0.7")
    g2 = ((su + 1) / (2 * su) * gml(0.7, 1.0, 1.0, -float((1 - su) * t_nu))
          + (su - 1) / (2 * su) * gml(0.7, 1.0, 1.0, -float((1 + su) * t_nu)))
    show("PGF2_07_U05_T3", g2)


if __name__ == "__main__":
    main()
