"""Third oracle batch: remaining anchors from the second-batch plan.

Requires mpmath (dev-only dependency; the shipped package never imports it).
Run:  python3 tools/make_oracle_values3.py
"""

import mpmath as mp


def _max_term_log10(log_term):
    best = mp.mpf(0)
    r = 0
    while r < 200000:
        v = log_term(r)
        if v > best:
            best = v
        if r > 10 and v < best - 60:
            break
        r = max(r + 1, int(r * 1.25))
    return float(best / mp.log(10))


def _sum_series(term, log_term, floor_log10=-40):
    peak = _max_term_log10(log_term)
    mp.mp.dps = int(60 + max(peak - floor_log10, 0))
    s = mp.mpf(0)
    small = 0
    r = 0
    while True:
        t = term(r)
        s += t
        if abs(t) < mp.mpf(10) ** (-(mp.mp.dps - 8)) * max(abs(s), mp.mpf(1)):
            small += 1
            if small >= 8:
                return s
        else:
            small = 0
        r += 1
        if r > 2000000:
            raise RuntimeError("series did not converge")


def gml(alpha, beta, gamma, x):
    alpha, beta, gamma, x = map(mp.mpf, (alpha, beta, gamma, x))

    def log_term(r):
        return (mp.loggamma(gamma + r) - mp.loggamma(gamma) - mp.loggamma(r + 1)
                + r * mp.log(abs(x)) - mp.re(mp.loggamma(alpha * r + beta)))

    def term(r):
        return (mp.gamma(gamma + r) / mp.gamma(gamma) / mp.gamma(r + 1)
                * x ** r * mp.rgamma(alpha * r + beta))

    return _sum_series(term, log_term)


def wright(lam, beta, x):
    lam, beta, x = map(mp.mpf, (lam, beta, x))

    def log_term(r):
        z = lam * r + beta
        return (r * mp.log(abs(x)) - mp.loggamma(r + 1)
                + mp.re(mp.loggamma(1 - z)))

    def term(r):
        return x ** r / mp.gamma(r + 1) * mp.rgamma(lam * r + beta)

    return _sum_series(term, log_term)


def pmf1(nu, x, k):
    nu, x = mp.mpf(nu), mp.mpf(x)

    def log_term(j):
        r = j + k
        return (mp.loggamma(r + 1) - mp.loggamma(k + 1) - mp.loggamma(j + 1)
                + r * mp.log(abs(x)) - mp.re(mp.loggamma(nu * r + 1)))

    def term(j):
        r = j + k
        return (mp.binomial(r, k) * (-1) ** j * x ** r * mp.rgamma(nu * r + 1))

    return _sum_series(term, log_term)


def show(name, v):
    print(f"{name} = {mp.nstr(v, 17)}    # {mp.nstr(v, 25)}", flush=True)


mp.mp.dps = 40

# three-parameter value at pre-threshold argument where the double series
# cancels hopelessly (peak term ~ e^400) and the integral route must serve
show("GML_05_12_5_M20", gml("0.5", "1.2", 5, -20))

# cumulative-form anchors x^d E^d_{nu, nu d + 1}(-x)
for name, nu, x, d in [
    ("CDF_05_X2P5_D3", "0.5", "2.5", 3),
    ("CDF_03_X5_D8", "0.3", "5", 8),
    ("CDF_07_X5_D9", "0.7", "5", 9),
    ("CDF_03_X0P9_D60", "0.3", "0.9", 60),
]:
    nu_, x_ = mp.mpf(nu), mp.mpf(x)
    v = x_ ** d * gml(nu, nu_ * d + 1, d, -x_)
    show(name, v)

# deep-tail single-term probabilities via the alternating binomial route
show("PMF1_03_X5_K40", pmf1("0.3", 5, 40))
show("PMF1_07_X5_K25", pmf1("0.7", 5, 25))

# Wright values for the oscillatory-tail quadrature path
show("W_05_15_M1", wright("0.5", "1.5", -1))
show("W_03_14_M2P03", wright("0.3", "1.4", -mp.mpf(2) ** mp.mpf("0.3")))
