"""The local defect of isolated threefold singularities.

For a threefold singularity with exceptional fiber E = union of surfaces
E_j, the local defect is

    sigma = h^{1,1}(E(1)) - h^0(E(2)) - h^0(E(1)),

the number of independent Weil-mod-Cartier divisor classes near the
point.  sigma = 0 means the point is analytically Q-factorial, and sigma
is always bounded by the number of discrepancy-1 divisors over the point.

Globally, summing the defect terms over all singular points gives
h^{2,2}_st - h^{1,1}_st, which is therefore nonnegative for threefolds.
"""

from stringyhodge import (
    ExceptionalFiberDescriptor,
    FiberComponent,
    HodgeDiamond,
    ResolutionDescriptor,
    defect_bound_check,
    local_defect,
    projective_space,
    quadric_surface,
    threefold_h22_minus_h11,
)

Q = quadric_surface()

node = ExceptionalFiberDescriptor("node", (FiberComponent("F", Q, 1),), {})
print("node (fiber P^1 x P^1, a=1):        sigma =", local_defect(node),
      "| bound ok:", defect_bound_check(node))

p2 = ExceptionalFiberDescriptor("cone point", (FiberComponent("F", projective_space(2), 2),), {})
print("P^2 fiber, a=2 (Q-factorial):       sigma =", local_defect(p2),
      "| bound ok:", defect_bound_check(p2))

pair = ExceptionalFiberDescriptor(
    "deeper point",
    (FiberComponent("F1", Q, 1), FiberComponent("F2", Q, 1)),
    {("F1", "F2"): 1},
)
print("two quadrics meeting in one curve:  sigma =", local_defect(pair),
      "| bound ok:", defect_bound_check(pair))

# A fiber that cannot occur: defect 1 with no discrepancy-1 divisor.
fake = ExceptionalFiberDescriptor("impossible", (FiberComponent("F", Q, 2),), {})
print("synthetic a=2 quadric fiber:        sigma =", local_defect(fake),
      "| bound ok:", defect_bound_check(fake), " <- not realizable")

# The global counterpart on the nodal threefold: the difference vanishes,
# as it must whenever the stringy E-function is a polynomial.
Y = HodgeDiamond(3, {(0, 0): 1, (1, 1): 3, (2, 2): 3, (3, 3): 1})
d = ResolutionDescriptor(3, (("E", 1),), {(): Y, ("E",): Q}, "node threefold")
print("\nnode threefold: h^{2,2}_st - h^{1,1}_st =", threefold_h22_minus_h11(d))
