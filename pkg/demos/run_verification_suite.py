"""
Verification walkthrough: transforms, kernels, and residuals
============================================================

Every distributional quantity in the library is cross-checked by an
independent numerical route: Laplace transforms are recomputed by
direct quadrature and compared with their rational closed forms,
masses are recovered through the random-clock kernel integral, and the
governing fractional equations are tested by discretizing the memory
derivative on refined grids and watching the residual contract.  This
script runs a slice of each family and shows how the reports read.
"""

from fracpois import (
    GridSpec,
    ProcessSpec,
    caputo_residual,
    run_suite,
    subordination_pmf,
    pmf,
)


def show(reports):
    for rep in reports:
        mark = "ok " if rep.passed else "FAIL"
        print(f"  [{mark}] {rep.name:46s} abs_err={rep.abs_err:.2e} "
              f"tol={rep.tol:g}")


# --- transform pairs: quadrature vs rational form ----------------------
print("Laplace-pair checks (forward quadrature vs closed form):")
show(run_suite(only="count-transform n=2"))

# --- kernel route: masses through the random-clock integral ------------
print("\nsubordination: kernel quadrature vs direct evaluation")
for nu in (0.3, 0.5, 0.7):
    q = subordination_pmf(2, nu, 1.0, 1.5)
    d = pmf(ProcessSpec(1, nu, 1.0), 2, 1.5)
    print(f"  nu={nu:g}: kernel {q:.12f}  direct {d:.12f}  "
          f"diff {abs(q - d):.1e}")

# --- governing-equation residuals under grid refinement ----------------
print("\nmemory-derivative residuals (ratio = residual shrink per grid")
print("halving; refinement passes when every ratio is <= 0.75):")
grid = GridSpec(0.1, 1.0, 16)
for n in (1, 2, 3):
    rep = caputo_residual(ProcessSpec(n, 0.6, 1.0), 1, grid)
    mark = "ok " if rep.passed else "FAIL"
    print(f"  [{mark}] {rep.name:46s} worst ratio {rep.lhs:.2f}")

# --- the full suite, as the command line runs it ------------------------
print("\nfull suite (same as `fracpois verify`):")
reports = run_suite()
failed = [rep for rep in reports if not rep.passed]
print(f"  {len(reports)} checks, {len(failed)} failures")
families = sorted({rep.name.split()[0] for rep in reports})
print("  families: " + ", ".join(families))
