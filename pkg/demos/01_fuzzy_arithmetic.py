"""Tour of fuzzy numbers as alpha-level interval families.

A fuzzy number here is a stack of nested intervals indexed by membership
level alpha in [0, 1]: wide at alpha = 0 (the support), collapsing to the
core at alpha = 1.  All arithmetic acts level by level.
"""

import numpy as np

from fuzzynewton import (
    TriangularFuzzy,
    add,
    alpha_cut,
    centroid,
    comparable,
    crisp,
    discretize,
    distance,
    hukuhara_diff,
    leq,
    mul,
    scalar_mul,
    square,
)


def show(label, a):
    sup, core = a.support(), a.core()
    print(f"  {label:14s} support [{sup.lo:8.3f}, {sup.hi:8.3f}]   "
          f"core [{core.lo:8.3f}, {core.hi:8.3f}]   "
          f"centroid {centroid(a):8.3f}")


print("Triangular fuzzy numbers and their alpha-cuts")
t = TriangularFuzzy(1.0, 2.0, 4.0)
for alpha in (0.0, 0.5, 1.0):
    cut = alpha_cut(t, alpha)
    print(f"  alpha={alpha:.1f}: [{cut.lo:.3f}, {cut.hi:.3f}]")

print("\nDiscretized arithmetic (101 levels)")
a = discretize(TriangularFuzzy(1.0, 2.0, 4.0))
b = discretize(TriangularFuzzy(-1.0, 0.5, 1.0))
show("a", a)
show("b", b)
show("a + b", add(a, b))
show("3 * a", scalar_mul(3.0, a))
show("-2 * a", scalar_mul(-2.0, a))
show("a * b", mul(a, b))

print("\nDependent squaring is tighter than a * a when 0 is inside")
show("b * b", mul(b, b))
show("square(b)", square(b))
print("  the product treats the two factors as independent, so its")
print("  support dips negative; the square of one quantity cannot.")

print("\nPartial order (fuzzy-max) compares level endpoints jointly")
lower = discretize(TriangularFuzzy(0.0, 1.0, 2.0))
higher = add(lower, crisp(0.5))
nested = discretize(TriangularFuzzy(0.5, 1.0, 1.5))
print(f"  lower <= higher:        {leq(lower, higher)}")
print(f"  higher <= lower:        {leq(higher, lower)}")
print(f"  lower vs nested:        comparable={comparable(lower, nested)}")
print("  nested supports with the same core cross endpoint order, so")
print("  neither dominates the other.")

print("\nSup-metric over levels")
print(f"  d(lower, higher) = {distance(lower, higher):.3f}")
print(f"  d(lower, lower)  = {distance(lower, lower):.3f}")

print("\nHukuhara difference: the additive complement, when it exists")
total = add(a, b)
h = hukuhara_diff(total, b)
print(f"  (a + b) -H b recovered: d(h, a) = {distance(h, a):.2e}")
verdict = hukuhara_diff(b, a)  # b is narrower than a: no complement
print(f"  b -H a exists: {bool(verdict)} ({verdict.reason} "
      f"at alpha={verdict.alpha:.2f})")
