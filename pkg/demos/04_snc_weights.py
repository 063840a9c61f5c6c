"""Weight-graded cohomology of a normal crossings divisor.

For a simple normal crossings variety D, the weight-k part of H^{k+l}(D)
is the l-th cohomology of the complex

    H^k(D(1)) -> H^k(D(2)) -> H^k(D(3)) -> ...

built from restriction maps with alternating signs.  On the H^0 row the
maps come for free from the incidence data, and the answer is the
simplicial cohomology of the dual complex.

Three surfaces meeting pairwise in a curve, with no triple point, have a
triangle as dual complex: its circle contributes one dimension of weight
zero to H^1(D).
"""

from fractions import Fraction

from stringyhodge import (
    HodgeDiamond,
    SncComplexData,
    SncComponent,
    coboundary_h0,
    purity_consequence_check,
    quadric_surface,
    weight_graded_dims,
)

Q = quadric_surface()

triangle = SncComplexData(levels={
    1: (SncComponent(("A",), Q), SncComponent(("B",), Q), SncComponent(("C",), Q)),
    2: (
        SncComponent(("A", "B"), faces=(1, 0)),
        SncComponent(("A", "C"), faces=(2, 0)),
        SncComponent(("B", "C"), faces=(2, 1)),
    ),
})

print("coboundary on the H^0 row:")
for row in coboundary_h0(triangle, 1):
    print("  ", [int(x) for x in row])

for l in (0, 1):
    print(f"Gr^W_0 H^{l}(D) has dimension", weight_graded_dims(triangle, 0, l, 0, 0))

# A chain of two surfaces has a contractible dual complex: weight 0 of
# H^1 vanishes.
chain = SncComplexData(levels={
    1: (SncComponent(("A",), Q), SncComponent(("B",), Q)),
    2: (SncComponent(("A", "B"), faces=(1, 0)),),
})
print("chain Gr^W_0 H^1(D) =", weight_graded_dims(chain, 0, 1, 0, 0))

# Higher rows need user-supplied restriction matrices.  Here the four
# H^{1,1} classes of two quadrics restrict onto the one class of their
# common curve; the complex is exact past the first spot, so the
# alternating-sum consequence applies in high degrees.
two_surfaces = SncComplexData(
    levels={
        1: (SncComponent(("A",), Q), SncComponent(("B",), Q)),
        2: (SncComponent(("A", "B"),
            HodgeDiamond(1, {(0, 0): 1, (1, 1): 1}),
            faces=(1, 0)),),
    },
    user_maps={(2, 1, 1): ([[Fraction(1), Fraction(1), Fraction(-1), Fraction(-1)]],)},
)
print("two surfaces, (1,1) piece of H^2:")
print("  Gr^W_2 H^2(D) =", weight_graded_dims(two_surfaces, 2, 0, 1, 1))
print("  Gr^W_2 H^3(D) =", weight_graded_dims(two_surfaces, 2, 1, 1, 1))
print("purity scan:", purity_consequence_check(two_surfaces, n=2, s=0))
