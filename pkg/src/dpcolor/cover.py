"""Covers of multigraphs: list sizes plus cross-edge matchings.

A cover assigns each vertex v a list of ``size(v)`` colors, canonically the
pairs (v, 1) .. (v, size(v)), and places cross edges between lists of
adjacent vertices.  Within each list all colors are mutually conflicting;
that clique is implicit and never stored.  Between the lists of u and v the
cross edges must form a union of multiplicity(u, v) matchings, which is
equivalent (by bipartite edge coloring) to the cross-edge bipartite graph
having maximum degree at most multiplicity(u, v).

A transversal picks one color per vertex; it is a proper coloring when no
chosen pair of colors is joined by a cross edge.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .config import DEFAULT, Config
from .errors import CapExceeded, ParseError
from .multigraph import Multigraph


@dataclass(frozen=True)
class Transversal:
    """One chosen color index (1-based) per vertex, ordered by vertex."""
    choice: tuple

    def color(self, v: int) -> int:
        return self.choice[v - 1]

    def __len__(self):
        return len(self.choice)


@dataclass(frozen=True)
class Violation:
    """First reason a purported cover breaks the cover conditions."""
    pair: tuple
    color: tuple | None
    message: str

    def __str__(self):
        where = f"pair {self.pair}"
        if self.color is not None:
            where += f", color {self.color}"
        return f"{where}: {self.message}"


class Cover:
    """Immutable cover of a base multigraph.

    cross maps a vertex pair (u, v) with u < v to a frozenset of (i, j)
    index pairs: color (u, i) conflicts with color (v, j).
    """

    __slots__ = ("base", "list_sizes", "cross")

    def __init__(self, base: Multigraph, list_sizes, cross=None):
        sizes = tuple(list_sizes)
        if len(sizes) != base.n:
            raise ValueError("need one list size per vertex")
        if any(s < 0 for s in sizes):
            raise ValueError("list sizes must be nonnegative")
        norm = {}
        for (u, v), edges in (cross or {}).items():
            if u >= v:
                raise ValueError(f"cross-edge key ({u}, {v}) must have u < v")
            if not (1 <= u and v <= base.n):
                raise ValueError(f"cross-edge key ({u}, {v}) out of range 1..{base.n}")
            es = frozenset((int(i), int(j)) for i, j in edges)
            if es:
                norm[(u, v)] = es
        self.base = base
        self.list_sizes = sizes
        self.cross = norm

    def size(self, v: int) -> int:
        return self.list_sizes[v - 1]

    def cross_edges(self, u: int, v: int) -> frozenset:
        key = (u, v) if u < v else (v, u)
        edges = self.cross.get(key, frozenset())
        if u < v:
            return edges
        return frozenset((j, i) for i, j in edges)

    def _key(self):
        return (self.base, self.list_sizes, tuple(sorted(self.cross.items())))

    def __eq__(self, other):
        return isinstance(other, Cover) and self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        return (f"Cover(n={self.base.n}, sizes={self.list_sizes}, "
                f"edges={sum(len(e) for e in self.cross.values())})")


def iter_violations(cover: Cover):
    """Yield cover-condition violations in deterministic order.

    Per pair: cross edges on non-adjacent vertices, then color indices out of
    range, then bipartite degrees above the edge multiplicity.
    """
    g = cover.base
    for (u, v), edges in sorted(cover.cross.items()):
        m = g.multiplicity(u, v)
        if m == 0:
            yield Violation((u, v), None, "cross edges between non-adjacent vertices")
            continue
        su, sv = cover.size(u), cover.size(v)
        in_range = True
        for i, j in sorted(edges):
            if not 1 <= i <= su:
                yield Violation((u, v), (u, i), f"color index {i} outside list of size {su}")
                in_range = False
            if not 1 <= j <= sv:
                yield Violation((u, v), (v, j), f"color index {j} outside list of size {sv}")
                in_range = False
        if not in_range:
            continue
        left = {}
        right = {}
        for i, j in edges:
            left[i] = left.get(i, 0) + 1
            right[j] = right.get(j, 0) + 1
        for i in sorted(left):
            if left[i] > m:
                yield Violation((u, v), (u, i),
                                f"bipartite degree {left[i]} exceeds multiplicity {m}")
        for j in sorted(right):
            if right[j] > m:
                yield Violation((u, v), (v, j),
                                f"bipartite degree {right[j]} exceeds multiplicity {m}")


def validate_cover(cover: Cover) -> Violation | None:
    """None if the cover conditions hold, else the first violation."""
    return next(iter_violations(cover), None)


def is_valid_cover(cover: Cover) -> bool:
    return validate_cover(cover) is None


# -- constructions ------------------------------------------------------------


def reduce_list(g: Multigraph, lists: dict) -> Cover:
    """Encode a list-coloring instance of a simple graph as a cover.

    lists maps each vertex to a sequence of distinct colors.  Cross edges join
    equal colors across an edge of g, so transversals of the result correspond
    exactly to proper list colorings.
    """
    if not g.is_simple():
        raise ValueError("list reduction is defined for simple graphs only")
    seqs = {}
    for v in g.vertices():
        if v not in lists:
            raise ValueError(f"missing list for vertex {v}")
        seq = list(lists[v])
        if len(set(seq)) != len(seq):
            raise ValueError(f"list of vertex {v} repeats a color")
        seqs[v] = seq
    cross = {}
    for u, v, _ in g.pairs():
        edges = {(i + 1, j + 1)
                 for i, cu in enumerate(seqs[u])
                 for j, cv in enumerate(seqs[v]) if cu == cv}
        if edges:
            cross[(u, v)] = edges
    return Cover(g, tuple(len(seqs[v]) for v in g.vertices()), cross)


def product_reduction(g: Multigraph, k: int) -> Cover:
    """Cover with k-lists and identity matchings; colorable iff g is k-colorable."""
    if k < 1:
        raise ValueError("need at least one color")
    if not g.is_simple():
        raise ValueError("product reduction is defined for simple graphs only")
    ident = frozenset((i, i) for i in range(1, k + 1))
    return Cover(g, (k,) * g.n, {(u, v): ident for u, v, _ in g.pairs()})


def build_bad_complete(n: int, k: int) -> Cover:
    """Degree cover of the k-fold complete multigraph on n vertices with no
    transversal.

    Each list has k*(n-1) colors arranged in n-1 bands of width k; two colors
    of different vertices conflict exactly when they lie in the same band.
    Any transversal must repeat a band among its n chosen colors.
    """
    if n < 2:
        raise ValueError("need at least 2 vertices")
    if k < 1:
        raise ValueError("multiplicity must be at least 1")
    base = Multigraph.complete(n, k)
    size = k * (n - 1)
    band = frozenset(((b - 1) * k + x, (b - 1) * k + y)
                     for b in range(1, n) for x in range(1, k + 1) for y in range(1, k + 1))
    cross = {(u, v): band for u in range(1, n + 1) for v in range(u + 1, n + 1)}
    return Cover(base, (size,) * n, cross)


def build_bad_cycle(n: int, k: int) -> Cover:
    """Degree cover of the k-fold n-cycle with no transversal.

    Lists have 2k colors in two bands of width k.  Consecutive edges match
    equal bands; the closing edge (1, n) matches bands straight or swapped
    depending on the parity of n, so band choices cannot alternate all the
    way around the cycle.
    """
    if n < 3:
        raise ValueError("need at least 3 vertices")
    if k < 1:
        raise ValueError("multiplicity must be at least 1")
    base = Multigraph.cycle(n, k)
    straight = frozenset(((b - 1) * k + x, (b - 1) * k + y)
                         for b in (1, 2) for x in range(1, k + 1) for y in range(1, k + 1))
    cross = {(v, v + 1): straight for v in range(1, n)}
    closing = set()
    for b2 in (1, 2):  # band at vertex n
        b1 = ((b2 + n) % 2) + 1  # band at vertex 1 that conflicts with it
        for x in range(1, k + 1):
            for y in range(1, k + 1):
                closing.add(((b1 - 1) * k + x, (b2 - 1) * k + y))
    cross[(1, n)] = frozenset(closing)
    return Cover(base, (2 * k,) * n, cross)


def glue(c1: Cover, c2: Cover, w1: int, w2: int) -> Cover:
    """Amalgamate two covers at a single shared vertex.

    Vertex w1 of the first base is identified with w2 of the second; the
    remaining vertices of the second graph are relabeled n1+1, n1+2, ... in
    sorted order.  The shared vertex's list is the concatenation of its two
    lists (the implicit clique spans the whole merged list), so list sizes
    add at the joint and are preserved elsewhere.
    """
    g1, g2 = c1.base, c2.base
    g1._check_vertex(w1)
    g2._check_vertex(w2)
    rest2 = [v for v in g2.vertices() if v != w2]
    remap = {w2: w1}
    for i, v in enumerate(rest2):
        remap[v] = g1.n + 1 + i
    n = g1.n + g2.n - 1
    mult = {pair: m for (pair, m) in ((p[:2], p[2]) for p in g1.pairs())}
    for u, v, m in g2.pairs():
        a, b = remap[u], remap[v]
        key = (a, b) if a < b else (b, a)
        mult[key] = m
    base = Multigraph(n, mult)

    sizes = [0] * n
    for v in g1.vertices():
        sizes[v - 1] = c1.size(v)
    for v in g2.vertices():
        if v == w2:
            sizes[w1 - 1] += c2.size(v)
        else:
            sizes[remap[v] - 1] = c2.size(v)

    offset = c1.size(w1)  # second cover's colors at the joint start after c1's
    cross = {pair: set(edges) for pair, edges in c1.cross.items()}
    for (u, v), edges in c2.cross.items():
        a, b = remap[u], remap[v]
        shift_u = offset if u == w2 else 0
        shift_v = offset if v == w2 else 0
        mapped = {(i + shift_u, j + shift_v) for i, j in edges}
        if a < b:
            cross[(a, b)] = mapped
        else:
            cross[(b, a)] = {(j, i) for i, j in mapped}
    return Cover(base, tuple(sizes), cross)


def permute_colors(cover: Cover, perms: dict) -> Cover:
    """Apply per-vertex permutations of color indices (a gauge transformation).

    perms maps a vertex v to a sequence p of length size(v) sending the old
    color i to the new color p[i-1].  Vertices missing from perms keep their
    labeling.  Colorability and the number of colorings are preserved.
    """
    full = {}
    for v in cover.base.vertices():
        s = cover.size(v)
        p = tuple(perms.get(v, range(1, s + 1)))
        if sorted(p) != list(range(1, s + 1)):
            raise ValueError(f"perms[{v}] is not a permutation of 1..{s}")
        full[v] = p
    cross = {}
    for (u, v), edges in cover.cross.items():
        pu, pv = full[u], full[v]
        cross[(u, v)] = {(pu[i - 1], pv[j - 1]) for i, j in edges}
    return Cover(cover.base, cover.list_sizes, cross)


# -- maximum matchings and their unions ----------------------------------------


def _maximum_matchings(a: int, b: int, cap: int):
    """All maximum matchings between row colors 1..a and column colors 1..b.

    Each is a frozenset of (row, col) cells of size min(a, b).
    """
    out = []
    if a <= b:
        for cols in itertools.permutations(range(1, b + 1), a):
            out.append(frozenset(zip(range(1, a + 1), cols)))
            if len(out) > cap:
                raise CapExceeded("too many matchings for one pair")
    else:
        for rows in itertools.permutations(range(1, a + 1), b):
            out.append(frozenset(zip(rows, range(1, b + 1))))
            if len(out) > cap:
                raise CapExceeded("too many matchings for one pair")
    return out


def _unions_of_maximum_matchings(a: int, b: int, m: int, cap: int):
    """Distinct unions of exactly m maximum matchings, sorted deterministically."""
    matchings = _maximum_matchings(a, b, cap)
    seen = set()
    count = 0
    for combo in itertools.combinations_with_replacement(range(len(matchings)), m):
        count += 1
        if count > cap:
            raise CapExceeded("too many cross-edge choices for one pair")
        union = frozenset().union(*(matchings[i] for i in combo))
        seen.add(union)
    return sorted(seen, key=sorted)


def _canonical_under_side(edge_sets, side: str, size: int):
    """Quotient edge sets by permutations of one side's colors (gauge fixing).

    Skipped for sizes where the factorial blows up; over-enumeration is
    harmless for the consumers of this stream.
    """
    if size > 6:
        return list(edge_sets)
    perms = list(itertools.permutations(range(1, size + 1)))
    reps = {}
    for es in edge_sets:
        best = None
        for p in perms:
            if side == "col":
                mapped = tuple(sorted((i, p[j - 1]) for i, j in es))
            else:
                mapped = tuple(sorted((p[i - 1], j) for i, j in es))
            if best is None or mapped < best:
                best = mapped
        reps.setdefault(best, frozenset(best))
    return sorted(reps.values(), key=sorted)


def _bounded_degree_sets(a: int, b: int, m: int, cap: int):
    """All bipartite edge sets on [a] x [b] with maximum degree <= m."""
    out = [frozenset()]
    for i in range(1, a + 1):
        nxt = []
        for es in out:
            coldeg = {}
            for _, j in es:
                coldeg[j] = coldeg.get(j, 0) + 1
            open_cols = [j for j in range(1, b + 1) if coldeg.get(j, 0) < m]
            for r in range(0, min(m, len(open_cols)) + 1):
                for cols in itertools.combinations(open_cols, r):
                    nxt.append(es | {(i, j) for j in cols})
                    if len(nxt) + len(out) > cap:
                        raise CapExceeded("too many cross-edge choices for one pair")
        out = nxt
    return out


def _spanning_forest(g: Multigraph):
    """BFS forest; returns {pair_key: child_vertex} for tree edges."""
    tree = {}
    seen = set()
    for root in g.vertices():
        if root in seen:
            continue
        seen.add(root)
        queue = [root]
        while queue:
            v = queue.pop(0)
            for w in g.neighbors(v):
                if w in seen:
                    continue
                seen.add(w)
                key = (v, w) if v < w else (w, v)
                tree[key] = w
                queue.append(w)
    return tree


def enumerate_degree_covers(g: Multigraph, maximal_only: bool = True,
                            config: Config = DEFAULT):
    """Yield degree covers of a connected multigraph, up to gauge equivalence.

    Every list has size equal to the vertex degree.  With maximal_only, each
    pair's cross edges form a union of exactly multiplicity(u, v) maximum
    matchings; every degree cover extends to such a cover and extending never
    creates a transversal, so this restricted stream suffices for detecting
    the existence of an uncolorable degree cover.

    Gauge fixing: along a BFS spanning tree each newly reached vertex's list
    is relabeled to put the tree-edge matching into a canonical position, so
    the stream covers every gauge class at least once (residual symmetry is
    not fully quotiented).
    """
    if not g.is_connected():
        raise ValueError("degree-cover enumeration needs a connected multigraph")
    total = sum(g.degrees())
    if total > config.max_total_degree:
        raise CapExceeded(f"total degree {total} exceeds cap {config.max_total_degree}")
    sizes = g.degrees()
    tree = _spanning_forest(g)
    pair_keys = []
    choice_lists = []
    for u, v, m in g.pairs():
        a, b = sizes[u - 1], sizes[v - 1]
        child = tree.get((u, v))
        cap = config.max_pair_choices
        if maximal_only:
            if child is None:
                choices = _unions_of_maximum_matchings(a, b, m, cap)
            elif m == 1:
                parent_size, child_size = (b, a) if child == u else (a, b)
                if parent_size <= child_size:
                    choices = [frozenset((i, i) for i in range(1, min(a, b) + 1))]
                else:
                    # child side is smaller; parent's matched colors are the
                    # only gauge-invariant data
                    choices = []
                    small, large = min(a, b), max(a, b)
                    for subset in itertools.combinations(range(1, large + 1), small):
                        if child == v:
                            choices.append(frozenset((subset[t], t + 1) for t in range(small)))
                        else:
                            choices.append(frozenset((t + 1, subset[t]) for t in range(small)))
            else:
                unions = _unions_of_maximum_matchings(a, b, m, cap)
                side = "col" if child == v else "row"
                choices = _canonical_under_side(unions, side, b if child == v else a)
        else:
            sets = _bounded_degree_sets(a, b, m, cap)
            if child is not None:
                side = "col" if child == v else "row"
                choices = _canonical_under_side(sets, side, b if child == v else a)
            else:
                choices = sorted(sets, key=sorted)
        pair_keys.append((u, v))
        choice_lists.append(choices)
    for combo in itertools.product(*choice_lists):
        cross = {key: es for key, es in zip(pair_keys, combo) if es}
        yield Cover(g, sizes, cross)


def random_degree_cover(g: Multigraph, rng) -> Cover:
    """Random degree cover whose pairs are unions of m random maximum matchings."""
    sizes = g.degrees()
    cross = {}
    for u, v, m in g.pairs():
        a, b = sizes[u - 1], sizes[v - 1]
        edges = set()
        for _ in range(m):
            if a <= b:
                cols = rng.sample(range(1, b + 1), a)
                edges.update(zip(range(1, a + 1), cols))
            else:
                rows = rng.sample(range(1, a + 1), b)
                edges.update(zip(rows, range(1, b + 1)))
        cross[(u, v)] = edges
    return Cover(g, sizes, cross)


# -- text format ----------------------------------------------------------------
#
# Line 1: n.  Line 2: the n list sizes.  Then one line "u i v j" per cross
# edge with u < v.  The base multigraph is not part of the format; parsing
# accepts an explicit base or infers the minimal one (each pair's
# multiplicity = the maximum bipartite degree of its cross edges).


def parse_cover(text: str, base: Multigraph | None = None) -> Cover:
    lines = text.splitlines()
    n = None
    sizes = None
    cross = {}
    for lineno, raw in enumerate(lines, start=1):
        parts = raw.split()
        if not parts:
            continue
        if n is None:
            if len(parts) != 1:
                raise ParseError("expected a single vertex count", lineno)
            try:
                n = int(parts[0])
            except ValueError:
                raise ParseError(f"bad vertex count {parts[0]!r}", lineno) from None
            if n < 1:
                raise ParseError("vertex count must be at least 1", lineno)
            continue
        if sizes is None:
            if len(parts) != n:
                raise ParseError(f"expected {n} list sizes", lineno)
            try:
                sizes = tuple(int(p) for p in parts)
            except ValueError:
                raise ParseError("non-integer list size", lineno) from None
            if any(s < 0 for s in sizes):
                raise ParseError("list sizes must be nonnegative", lineno)
            continue
        if len(parts) != 4:
            raise ParseError("expected 'u i v j'", lineno)
        try:
            u, i, v, j = (int(p) for p in parts)
        except ValueError:
            raise ParseError(f"non-integer entry in {raw.strip()!r}", lineno) from None
        if not (1 <= u <= n and 1 <= v <= n):
            raise ParseError(f"vertex out of range in ({u}, {v})", lineno)
        if u >= v:
            raise ParseError("cross edges must be written with u < v", lineno)
        if not (1 <= i <= sizes[u - 1]):
            raise ParseError(f"color index {i} outside list of vertex {u}", lineno)
        if not (1 <= j <= sizes[v - 1]):
            raise ParseError(f"color index {j} outside list of vertex {v}", lineno)
        if (i, j) in cross.get((u, v), ()):
            raise ParseError(f"duplicate cross edge {u} {i} {v} {j}", lineno)
        cross.setdefault((u, v), set()).add((i, j))
    if n is None:
        raise ParseError("empty input: missing vertex count")
    if sizes is None:
        raise ParseError("missing list sizes line")
    if base is None:
        mult = {}
        for (u, v), edges in cross.items():
            left = {}
            right = {}
            for i, j in edges:
                left[i] = left.get(i, 0) + 1
                right[j] = right.get(j, 0) + 1
            mult[(u, v)] = max(max(left.values()), max(right.values()))
        base = Multigraph(n, mult)
    elif base.n != n:
        raise ParseError(f"cover has {n} vertices but base graph has {base.n}")
    return Cover(base, sizes, cross)


def format_cover(cover: Cover) -> str:
    lines = [str(cover.base.n), " ".join(str(s) for s in cover.list_sizes)]
    for (u, v), edges in sorted(cover.cross.items()):
        for i, j in sorted(edges):
            lines.append(f"{u} {i} {v} {j}")
    return "\n".join(lines) + "\n"
