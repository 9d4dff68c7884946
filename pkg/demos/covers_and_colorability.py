"""Two covers of the 4-cycle: same list sizes, opposite answers.

A cover gives every vertex a private list of colors and wires conflicting
colors across each edge with matchings.  With straight (identity) matchings
all around, alternating the two colors works.  Twist the matching on one
edge and every assignment dies somewhere: the 4-cycle is not colorable from
lists of size 2 under every cover, even though it is 2-choosable.
"""

from dpcolor import (Multigraph, build_bad_cycle, chi_dp, format_cover,
                     product_reduction, solve)

c4 = Multigraph.cycle(4)

straight = product_reduction(c4, 2)  # identity matchings on all four edges
twisted = build_bad_cycle(4, 1)      # same sizes, one matching swapped

print("straight matchings:", solve(straight))
print("twisted matchings: ", solve(twisted))

print("\nthe twisted cover, serialized:")
print(format_cover(twisted))

print("so lists of size 2 are not enough for every cover; indeed")
print("chi_dp(C_4) =", chi_dp(c4))
print("and for every cycle length n = 3..7:",
      [chi_dp(Multigraph.cycle(n)) for n in range(3, 8)])
