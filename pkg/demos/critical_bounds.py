"""Criticality certificates and exact edge-count bounds.

A multigraph is DP-k-critical when its DP-chromatic number is exactly k and
deleting any single edge lowers it.  Critical multigraphs cannot be sparse:
2|E| >= (k-1) n, with equality for uniform cycle powers.  For simple graphs
with k >= 4 the coefficient improves to (k-1) + (k-3)/(k^2-3), and the
supporting count for that improvement is that GDP-trees (blocks complete or
cycles) with bounded degree satisfy 2|E| <= (k-2 + 2/(k-1)) n.  All slack
arithmetic is exact rationals; nothing here rounds.
"""

from dpcolor import (Multigraph, check_bound_multigraph, check_bound_simple,
                     check_critical, check_gdp_edge_bound, gdp_trees,
                     simple_critical_coefficient)

print("criticality certificates:")
for g, k, name in [
    (Multigraph.complete(4), 4, "complete graph on 4"),
    (Multigraph.cycle(5), 3, "5-cycle"),
    (Multigraph.cycle(3, 2), 5, "doubled triangle"),
    (Multigraph.complete(2, 3), 4, "tripled edge"),
]:
    report = check_critical(g, k)
    ok, slack = check_bound_multigraph(g, k)
    print(f"  {name:22s} chi_dp={report.chi} critical={report.is_critical} "
          f"edge-bound slack={slack}")

print("\nthe doubled triangle meets the bound with equality, as do all")
print("uniform cycle powers at k = 2*mult + 1:")
for n in (3, 4, 5):
    for mult in (1, 2):
        g = Multigraph.cycle(n, mult)
        _, slack = check_bound_multigraph(g, 2 * mult + 1)
        assert slack == 0
print("  verified for cycle lengths 3..5 and multiplicities 1..2")

print("\nsimple-graph coefficient at k=4:", simple_critical_coefficient(4))
w5 = Multigraph.from_edges(6, [(1, 2), (2, 3), (3, 4), (4, 5), (1, 5),
                               (1, 6), (2, 6), (3, 6), (4, 6), (5, 6)])
print("5-wheel is DP-4-critical:", check_critical(w5, 4).is_critical)
ok, slack = check_bound_simple(w5, 4)
print("5-wheel strong bound slack:", slack, f"(= {float(slack):.3f})")

print("\nGDP-tree edge bound over the census (8 vertices, k = 4 and 5):")
for k in (4, 5):
    trees = gdp_trees(8, max_complete_block=k - 1, max_degree=k - 1)
    worst = min(check_gdp_edge_bound(t, k)[1] for t in trees)
    print(f"  k={k}: {len(trees):4d} trees, minimum slack {worst}")
