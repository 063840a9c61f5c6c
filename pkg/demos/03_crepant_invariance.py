"""Resolution independence of the stringy E-function, on the ordinary node.

A threefold node admits two natural resolutions:

  * a small resolution, with no exceptional divisor at all;
  * the blow-up, whose exceptional divisor is P^1 x P^1 with discrepancy 1.

Both must give the same stringy E-function.  Mislabeling the discrepancy
breaks the agreement, and the comparison pinpoints where.
"""

from stringyhodge import (
    HodgeDiamond,
    ResolutionDescriptor,
    crepant_compare,
    quadric_surface,
    stringy_e,
)
from stringyhodge.stringy import first_coefficient_difference

def diagonal(*vals):
    return HodgeDiamond(len(vals) - 1, {(i, i): v for i, v in enumerate(vals)})

small = ResolutionDescriptor(3, (), {(): diagonal(1, 2, 2, 1)}, "small resolution")
blowup = ResolutionDescriptor(
    3, (("E", 1),),
    {(): diagonal(1, 3, 3, 1), ("E",): quadric_surface()},
    "blow-up",
)

print("E_st via small resolution:", stringy_e(small))
print("E_st via blow-up:         ", stringy_e(blowup))
print("equal?", crepant_compare(small, blowup))

wrong = ResolutionDescriptor(
    3, (("E", 2),),
    {(): diagonal(1, 3, 3, 1), ("E",): quadric_surface()},
    "blow-up with wrong discrepancy",
)
print("\nwith the discrepancy mislabeled as 2:")
print("equal?", crepant_compare(small, wrong))
print("first differing coefficient (p, q, b_small, b_wrong):",
      first_coefficient_difference(small, wrong))
