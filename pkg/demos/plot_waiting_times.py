"""
Waiting times: power-law tails against the exponential benchmark
================================================================

Interarrival times of the fractional process have density
``lam * t**(nu-1) * E_{nu,nu}(-lam * t**nu)``, which decays like
``t**(-nu-1)`` instead of exponentially — the mean waiting time is
infinite for every ``nu < 1``.  Higher-order processes (order n counts
every n-th arrival) sharpen the density near the origin but inherit the
same polynomial tail.  This script plots both effects and checks the
tail against its closed-form asymptote.
"""

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from fracpois import (
    ProcessSpec,
    interarrival_pdf,
    interarrival_tail_asymptote,
    waiting_time_pdf,
)

LAM = 1.0

# --- tail behavior: density vs asymptote on a log-log grid -----------
t_tail = np.geomspace(0.05, 500.0, 120)
fig, (ax1, ax2) = plt.subplots(1, 2, figsize=(11, 4.5))

for nu, color in ((0.5, "tab:blue"), (0.8, "tab:orange")):
    spec = ProcessSpec(1, nu, LAM)
    dens = [interarrival_pdf(spec, t) for t in t_tail]
    asym = [interarrival_tail_asymptote(spec, t) for t in t_tail]
    ax1.loglog(t_tail, dens, color=color, label=f"density, nu = {nu:g}")
    ax1.loglog(t_tail, asym, ":", color=color,
               label=f"t**(-{nu + 1:g}) asymptote")
ax1.loglog(t_tail, LAM * np.exp(-LAM * t_tail), "k--", alpha=0.5,
           label="exponential (nu = 1)")
ax1.set_xlabel("t")
ax1.set_ylabel("interarrival density")
ax1.set_title("polynomial vs exponential tails")
ax1.set_ylim(1e-8, 20)
ax1.legend(fontsize=8)
ax1.grid(True, which="both", alpha=0.3)

# Quantify the tail agreement at a point deep in the asymptotic regime.
print("tail check at t = 200 (ratio density/asymptote):")
for n in (1, 2):
    spec = ProcessSpec(n, 0.5, LAM)
    ratio = interarrival_pdf(spec, 200.0) / interarrival_tail_asymptote(
        spec, 200.0)
    print(f"  order n={n}, nu=0.5: {ratio:.4f}")

# --- waiting time of the k-th event, orders 1 and 2 -------------------
t_pdf = np.linspace(0.01, 8.0, 160)
for n, style in ((1, "-"), (2, "--")):
    spec = ProcessSpec(n, 0.6, LAM)
    for k, color in ((1, "tab:green"), (3, "tab:red")):
        dens = [waiting_time_pdf(spec, k, t) for t in t_pdf]
        ax2.plot(t_pdf, dens, style, color=color,
                 label=f"n={n}, event k={k}")
ax2.set_xlabel("t")
ax2.set_ylabel("waiting-time density")
ax2.set_title("k-th event waiting times, nu = 0.6")
ax2.legend(fontsize=8)
ax2.grid(True, alpha=0.3)

fig.tight_layout()
fig.savefig("waiting_times.png", dpi=150)
print("\nwrote waiting_times.png")
