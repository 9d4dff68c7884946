"""Canonical censuses of small multigraphs, simple graphs, and GDP-trees.

Canonicalization is deliberately lightweight: small vertex counts use the
minimum multiplicity vector over all vertex permutations; larger simple
censuses bucket graphs by cheap invariants and settle ties with an exact
isomorphism backtracker.  No external canonical-labeling dependency.
"""

from __future__ import annotations

import itertools

from .multigraph import Multigraph

_PAIR_CACHE = {}


def _pairs_of(n):
    if n not in _PAIR_CACHE:
        _PAIR_CACHE[n] = [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1)]
    return _PAIR_CACHE[n]


def canonical_key(g: Multigraph) -> tuple:
    """Minimum multiplicity vector over all vertex relabelings.

    Exponential in n; intended for n <= 7.
    """
    n = g.n
    pairs = _pairs_of(n)
    vec = tuple(g.multiplicity(u, v) for u, v in pairs)
    if n > 8:
        raise ValueError("canonical_key is for small graphs only")
    index = {p: i for i, p in enumerate(pairs)}
    best = vec
    for perm in itertools.permutations(range(1, n + 1)):
        mapped = [0] * len(pairs)
        for (u, v), m in zip(pairs, vec):
            a, b = perm[u - 1], perm[v - 1]
            mapped[index[(a, b) if a < b else (b, a)]] = m
        t = tuple(mapped)
        if t < best:
            best = t
    return (n, best)


def _degree_profile(g: Multigraph):
    """Sorted (degree, sorted neighbor degrees with multiplicities) per vertex."""
    degs = g.degrees()
    prof = []
    for v in g.vertices():
        nd = sorted((g.multiplicity(v, w), degs[w - 1]) for w in g.neighbors(v))
        prof.append((degs[v - 1], tuple(nd)))
    return tuple(sorted(prof))


def are_isomorphic(g1: Multigraph, g2: Multigraph) -> bool:
    """Exact isomorphism test respecting multiplicities (backtracking)."""
    if g1.n != g2.n or g1.edge_total() != g2.edge_total():
        return False
    if sorted(g1.degrees()) != sorted(g2.degrees()):
        return False
    if _degree_profile(g1) != _degree_profile(g2):
        return False
    n = g1.n
    degs1, degs2 = g1.degrees(), g2.degrees()
    order = sorted(g1.vertices(), key=lambda v: (-degs1[v - 1], v))
    mapping = {}
    used = set()

    def extend(idx):
        if idx == n:
            return True
        v = order[idx]
        for w in g2.vertices():
            if w in used or degs2[w - 1] != degs1[v - 1]:
                continue
            ok = True
            for prev_v, prev_w in mapping.items():
                if g1.multiplicity(v, prev_v) != g2.multiplicity(w, prev_w):
                    ok = False
                    break
            if not ok:
                continue
            mapping[v] = w
            used.add(w)
            if extend(idx + 1):
                return True
            del mapping[v]
            used.remove(w)
        return False

    return extend(0)


class _IsoSet:
    """Collects graphs up to isomorphism, bucketed by cheap invariants."""

    def __init__(self):
        self.buckets = {}
        self.items = []

    def add(self, g: Multigraph) -> bool:
        key = (g.n, g.edge_total(), _degree_profile(g))
        bucket = self.buckets.setdefault(key, [])
        for other in bucket:
            if are_isomorphic(g, other):
                return False
        bucket.append(g)
        self.items.append(g)
        return True


def connected_multigraphs(max_n: int, max_mult: int):
    """All connected multigraphs with at most max_n vertices and edge
    multiplicities at most max_mult, one canonical representative each.

    Ordered by (n, total edges, canonical vector).
    """
    if max_n > 6:
        raise ValueError("multigraph census supported up to 6 vertices")
    out = []
    for n in range(1, max_n + 1):
        pairs = _pairs_of(n)
        seen = set()
        for vec in itertools.product(range(max_mult + 1), repeat=len(pairs)):
            mult = {p: m for p, m in zip(pairs, vec) if m}
            g = Multigraph(n, mult)
            if not g.is_connected():
                continue
            key = canonical_key(g)
            if key in seen:
                continue
            seen.add(key)
            out.append((n, g.edge_total(), key, g))
    out.sort(key=lambda r: r[:3])
    return [r[3] for r in out]


def connected_simple_graphs(max_n: int, min_degree: int = 0):
    """Connected simple graphs with at most max_n vertices, up to isomorphism.

    min_degree prunes during generation (useful when hunting critical
    graphs, whose minimum degree is forced).
    """
    result = []
    for n in range(1, max_n + 1):
        if n == 1 and min_degree > 0:
            continue
        pairs = _pairs_of(n)
        np = len(pairs)
        touching = [0] * (n + 1)
        for idx, (u, v) in enumerate(pairs):
            touching[u] |= 1 << idx
            touching[v] |= 1 << idx
        iso = _IsoSet()
        for mask in range(1 << np):
            if n > 1 and min_degree > 0:
                if any((mask & touching[v]).bit_count() < min_degree
                       for v in range(1, n + 1)):
                    continue
            mult = {pairs[i]: 1 for i in range(np) if mask >> i & 1}
            g = Multigraph(n, mult)
            if not g.is_connected():
                continue
            iso.add(g)
        result.extend(sorted(iso.items, key=lambda g: (g.n, g.edge_total(),
                                                       sorted(g.degrees()),
                                                       g.pairs())))
    return result


def gdp_trees(max_n: int, max_complete_block: int, max_degree: int):
    """Connected simple graphs on <= max_n vertices whose blocks are complete
    graphs (on at most max_complete_block vertices) or cycles, with maximum
    degree at most max_degree.  One representative per isomorphism class.

    Generated constructively: start from a single vertex and repeatedly
    attach a new block at an existing vertex; every such graph with b+1
    blocks arises from one with b blocks by removing a leaf block, so the
    expansion is exhaustive.
    """
    iso = _IsoSet()
    seed = Multigraph(1, {})
    iso.add(seed)
    frontier = [seed]
    block_menu = []
    for r in range(2, max_complete_block + 1):
        block_menu.append(("complete", r))
    for t in range(4, max_n + 1):
        block_menu.append(("cycle", t))

    def attach(g, v, kind, size):
        extra = size - 1
        if g.n + extra > max_n:
            return None
        added = list(range(g.n + 1, g.n + extra + 1))
        ring = [v] + added
        mult = {(u, w): m for u, w, m in g.pairs()}
        if kind == "complete":
            for a, b in itertools.combinations(ring, 2):
                mult[(a, b) if a < b else (b, a)] = 1
        else:
            for a, b in zip(ring, ring[1:]):
                mult[(a, b) if a < b else (b, a)] = 1
            a, b = ring[0], ring[-1]
            mult[(a, b) if a < b else (b, a)] = 1
        g2 = Multigraph(g.n + extra, mult)
        if g2.max_degree() > max_degree:
            return None
        return g2

    while frontier:
        nxt = []
        for g in frontier:
            for v in g.vertices():
                for kind, size in block_menu:
                    g2 = attach(g, v, kind, size)
                    if g2 is not None and iso.add(g2):
                        nxt.append(g2)
        frontier = nxt
    return sorted(iso.items, key=lambda g: (g.n, g.edge_total(), sorted(g.degrees()),
                                            g.pairs()))
