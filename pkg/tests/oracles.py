"""Independent brute-force oracles for pinning expected values.

Everything here deliberately avoids the library's search machinery: plain
product scans and naive backtracking only, so a disagreement means a real
bug rather than a shared one.
"""

import itertools

from dpcolor import Multigraph, permute_colors


def brute_force_transversal(cover):
    """Scan the full choice product; return a surviving tuple or None."""
    sizes = cover.list_sizes
    cross = sorted(cover.cross.items())
    for t in itertools.product(*[range(1, s + 1) for s in sizes]):
        if all((t[u - 1], t[v - 1]) not in edges for (u, v), edges in cross):
            return t
    return None


def brute_count_transversals(cover):
    """Number of proper transversals, by full product scan."""
    sizes = cover.list_sizes
    cross = sorted(cover.cross.items())
    count = 0
    for t in itertools.product(*[range(1, s + 1) for s in sizes]):
        if all((t[u - 1], t[v - 1]) not in edges for (u, v), edges in cross):
            count += 1
    return count


def brute_list_coloring(g, lists):
    """Direct list-coloring backtracker over actual color values."""
    vs = list(g.vertices())
    assign = {}

    def rec(i):
        if i == len(vs):
            return True
        v = vs[i]
        for c in lists[v]:
            if any(assign.get(w) == c for w in g.neighbors(v)):
                continue
            assign[v] = c
            if rec(i + 1):
                return True
            del assign[v]
        return False

    return rec(0)


def brute_chromatic_number(g):
    simple = g.underlying_simple()
    for k in range(1, g.n + 1):
        if brute_list_coloring(simple, {v: range(k) for v in simple.vertices()}):
            return k
    raise AssertionError("unreachable: n colors always suffice")


def brute_degeneracy(g):
    """Max over nonempty vertex subsets of the induced minimum degree."""
    verts = list(g.vertices())
    best = 0
    for r in range(1, len(verts) + 1):
        for sub in itertools.combinations(verts, r):
            ss = set(sub)
            mind = min(sum(g.multiplicity(v, w) for w in g.neighbors(v) if w in ss)
                       for v in sub)
            best = max(best, mind)
    return best


def gauge_equivalent(c1, c2):
    """True if some per-vertex color relabeling maps c1 onto c2 (tiny lists)."""
    if c1.base != c2.base or c1.list_sizes != c2.list_sizes:
        return False
    perm_choices = [list(itertools.permutations(range(1, s + 1)))
                    for s in c1.list_sizes]
    for combo in itertools.product(*perm_choices):
        perms = {v: combo[v - 1] for v in c1.base.vertices()}
        if permute_colors(c1, perms) == c2:
            return True
    return False


def random_connected_multigraph(rng, max_n, max_mult, min_n=1):
    while True:
        n = rng.randint(min_n, max_n)
        mult = {}
        for u in range(1, n + 1):
            for v in range(u + 1, n + 1):
                m = rng.randint(0, max_mult)
                if m:
                    mult[(u, v)] = m
        g = Multigraph(n, mult)
        if g.is_connected():
            return g


def random_simple_graph(rng, max_n, edge_prob=0.5, min_n=1):
    n = rng.randint(min_n, max_n)
    mult = {}
    for u in range(1, n + 1):
        for v in range(u + 1, n + 1):
            if rng.random() < edge_prob:
                mult[(u, v)] = 1
    return Multigraph(n, mult)
