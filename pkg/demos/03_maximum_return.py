"""Maximum-return portfolio objective, crisp and fuzzy variants.

The model minimizes g(x) = -0.06667 x - 1.1167 + rho (c(x) - Va)^2 / Va^2
where c(x) = 0.1256 x^2 - 0.1589 x + 0.05139 is a variance proxy: seek
the best expected return subject to a quadratic penalty for missing the
variance aspiration Va with weight rho.  The fuzzy variant makes Va and
rho triangular and propagates them through the levels.
"""

from fuzzynewton import (
    MaxReturnParams,
    NewtonConfig,
    ProblemSpec,
    TriangularFuzzy,
    centroid,
    eval_fuzzy,
    resolve_problem,
    solve,
)


def run(kind, params):
    resolved = resolve_problem(ProblemSpec(kind=kind, params=params))
    cfg = NewtonConfig(x0=resolved.x0, eps=resolved.eps, scal=resolved.scal)
    res = solve(resolved.function, cfg)
    value = eval_fuzzy(resolved.function, res.xstar, 101)
    return res, value


print("Crisp sweep: aspiration level Va and penalty weight rho")
print(f"  {'Va':>9} {'rho':>5} {'xstar':>10} {'return':>10} {'iters':>6}")
for va, rho in [(0.00168, 1.0), (0.00168, 1.5), (0.00169, 1.5),
                (0.00169, 2.0)]:
    res, value = run("max_return_crisp", MaxReturnParams(Va=va, rho=rho))
    print(f"  {va:>9.5f} {rho:>5.1f} {res.xstar:>10.4f} "
          f"{-centroid(value):>10.4f} {res.iterations:>6}")
print("  the optimal mix barely moves; the attainable return is stable")
print("  near 1.1633 across aspiration settings.")

print("\nFuzzy instance: Va = (0.00167, 0.00168, 0.00172), "
      "rho = (0.5, 1.5, 3.5)")
params = MaxReturnParams(
    Va=TriangularFuzzy(0.00167, 0.00168, 0.00172),
    rho=TriangularFuzzy(0.5, 1.5, 3.5),
)
res, value = run("max_return_fuzzy", params)
print(f"  status {res.status} in {res.iterations} iterations")
print(f"  xstar = {res.xstar:.4f}")
print(f"  fuzzy objective at xstar: support [{value.lo[0]:.4f}, "
      f"{value.hi[0]:.4f}], core {value.lo[-1]:.4f}")
print(f"  centroid-defuzzified value {centroid(value):.4f} "
      f"(return {-centroid(value):.4f})")

print("\nUncertainty in the parameters widens the value, not the decision:")
crisp_res, _ = run("max_return_crisp", None)
print(f"  crisp xstar {crisp_res.xstar:.4f} vs fuzzy xstar {res.xstar:.4f}")
print(f"  value spread at xstar: {value.hi[0] - value.lo[0]:.2e}")
