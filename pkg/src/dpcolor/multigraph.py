"""Loopless multigraphs on vertices 1..n, with block structure queries.

Multiplicities are stored sparsely: a pair (u, v) with u < v maps to the
number of parallel edges between u and v (at least 1; absent means 0).
Instances are immutable after construction and safe to share across workers.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ParseError


class Multigraph:
    """An undirected multigraph without loops."""

    __slots__ = ("n", "_mult", "_adj", "_deg")

    def __init__(self, n: int, mult=None):
        if n < 1:
            raise ValueError("vertex count must be at least 1")
        self.n = n
        norm = {}
        for (u, v), k in (mult or {}).items():
            if u == v:
                raise ValueError(f"loop at vertex {u} not allowed")
            if not (1 <= u <= n and 1 <= v <= n):
                raise ValueError(f"vertex pair ({u}, {v}) out of range 1..{n}")
            if k < 0:
                raise ValueError(f"negative multiplicity for ({u}, {v})")
            if k == 0:
                continue
            key = (u, v) if u < v else (v, u)
            if key in norm and norm[key] != k:
                raise ValueError(f"conflicting multiplicities for pair {key}")
            norm[key] = k
        self._mult = norm
        adj = {v: [] for v in range(1, n + 1)}
        for (u, v) in norm:
            adj[u].append(v)
            adj[v].append(u)
        self._adj = {v: tuple(sorted(ws)) for v, ws in adj.items()}
        deg = [0] * (n + 1)
        for (u, v), k in norm.items():
            deg[u] += k
            deg[v] += k
        self._deg = deg

    # -- construction helpers -------------------------------------------------

    @classmethod
    def from_edges(cls, n: int, edges) -> "Multigraph":
        """Build from (u, v) or (u, v, k) entries; repeated pairs accumulate."""
        mult = {}
        for e in edges:
            u, v = e[0], e[1]
            k = e[2] if len(e) > 2 else 1
            key = (u, v) if u < v else (v, u)
            mult[key] = mult.get(key, 0) + k
        return cls(n, mult)

    @classmethod
    def complete(cls, n: int, k: int = 1) -> "Multigraph":
        return cls(n, {(u, v): k for u in range(1, n + 1) for v in range(u + 1, n + 1)})

    @classmethod
    def cycle(cls, n: int, k: int = 1) -> "Multigraph":
        if n < 3:
            raise ValueError("a cycle needs at least 3 vertices")
        mult = {(v, v + 1): k for v in range(1, n)}
        mult[(1, n)] = k
        return cls(n, mult)

    @classmethod
    def path(cls, n: int) -> "Multigraph":
        return cls(n, {(v, v + 1): 1 for v in range(1, n)})

    # -- basic queries --------------------------------------------------------

    def vertices(self):
        return range(1, self.n + 1)

    def multiplicity(self, u: int, v: int) -> int:
        if u == v:
            raise ValueError("no loops: multiplicity(v, v) is undefined")
        key = (u, v) if u < v else (v, u)
        return self._mult.get(key, 0)

    def pairs(self):
        """Sorted (u, v, k) triples with u < v and k >= 1."""
        return [(u, v, k) for (u, v), k in sorted(self._mult.items())]

    def neighbors(self, v: int) -> tuple:
        self._check_vertex(v)
        return self._adj[v]

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return self._deg[v]

    def degrees(self) -> tuple:
        return tuple(self._deg[1:])

    def max_degree(self) -> int:
        return max(self._deg[1:])

    def edge_total(self) -> int:
        """Number of edges counted with multiplicity."""
        return sum(self._mult.values())

    def is_simple(self) -> bool:
        return all(k == 1 for k in self._mult.values())

    def _check_vertex(self, v):
        if not (1 <= v <= self.n):
            raise ValueError(f"vertex {v} out of range 1..{self.n}")

    # -- derived graphs -------------------------------------------------------

    def power(self, k: int) -> "Multigraph":
        """Replace every edge with k parallel copies."""
        if k < 1:
            raise ValueError("power exponent must be at least 1")
        return Multigraph(self.n, {p: k * m for p, m in self._mult.items()})

    def underlying_simple(self) -> "Multigraph":
        return Multigraph(self.n, {p: 1 for p in self._mult})

    def induced(self, vertices) -> "Multigraph":
        """Sub-multigraph on the given vertices, relabeled 1..m in sorted order."""
        vs = sorted(set(vertices))
        if not vs:
            raise ValueError("induced subgraph needs at least one vertex")
        pos = {v: i + 1 for i, v in enumerate(vs)}
        mult = {(pos[u], pos[v]): k for (u, v), k in self._mult.items()
                if u in pos and v in pos}
        return Multigraph(len(vs), mult)

    def delete_single_edge(self, u: int, v: int) -> "Multigraph":
        """Remove one parallel edge between u and v."""
        key = (u, v) if u < v else (v, u)
        if self._mult.get(key, 0) < 1:
            raise ValueError(f"no edge between {u} and {v}")
        mult = dict(self._mult)
        mult[key] -= 1
        return Multigraph(self.n, mult)

    def delete_vertex(self, v: int) -> "Multigraph":
        self._check_vertex(v)
        if self.n == 1:
            raise ValueError("cannot delete the last vertex")
        return self.induced([w for w in self.vertices() if w != v])

    # -- connectivity ---------------------------------------------------------

    def components(self):
        """Connected components as sorted vertex tuples, ordered by minimum."""
        seen = set()
        comps = []
        for start in self.vertices():
            if start in seen:
                continue
            stack = [start]
            comp = {start}
            seen.add(start)
            while stack:
                v = stack.pop()
                for w in self._adj[v]:
                    if w not in comp:
                        comp.add(w)
                        seen.add(w)
                        stack.append(w)
            comps.append(tuple(sorted(comp)))
        return comps

    def is_connected(self) -> bool:
        return len(self.components()) == 1

    def degeneracy(self) -> int:
        """Smallest d such that every sub-multigraph has a vertex of degree <= d.

        Computed by repeatedly deleting a minimum-degree vertex; degrees count
        multiplicity.
        """
        deg = {v: self._deg[v] for v in self.vertices()}
        alive = set(self.vertices())
        best = 0
        while alive:
            v = min(alive, key=lambda x: (deg[x], x))
            best = max(best, deg[v])
            alive.remove(v)
            for w in self._adj[v]:
                if w in alive:
                    deg[w] -= self.multiplicity(v, w)
        return best

    # -- value semantics ------------------------------------------------------

    def _key(self):
        return (self.n, tuple(sorted(self._mult.items())))

    def __eq__(self, other):
        return isinstance(other, Multigraph) and self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        return f"Multigraph(n={self.n}, edges={self.pairs()})"


# -- block decomposition ------------------------------------------------------


@dataclass(frozen=True)
class CompletePower:
    """Block isomorphic to the complete graph on n vertices, every pair k-fold."""
    n: int
    k: int


@dataclass(frozen=True)
class CyclePower:
    """Block isomorphic to the n-cycle (n >= 4) with every edge k-fold."""
    n: int
    k: int


@dataclass(frozen=True)
class Other:
    """Block that is neither a complete power nor a cycle power."""


@dataclass(frozen=True)
class BlockDecomposition:
    blocks: tuple            # sorted vertex tuples, ordered by smallest vertex
    cut_vertices: tuple
    classifications: tuple   # parallel to blocks


def _articulation_data(g: Multigraph):
    """Iterative lowpoint DFS on the underlying simple graph.

    Returns (blocks as edge lists, cut vertex set, isolated vertices).
    """
    disc = {}
    low = {}
    cuts = set()
    edge_blocks = []
    isolated = []
    timer = 0
    for start in g.vertices():
        if start in disc:
            continue
        if not g.neighbors(start):
            isolated.append(start)
            continue
        disc[start] = low[start] = timer
        timer += 1
        estack = []
        root_pops = 0
        stack = [(start, None, iter(g.neighbors(start)))]
        while stack:
            v, parent, it = stack[-1]
            pushed = False
            for w in it:
                if w == parent:
                    continue
                if w not in disc:
                    estack.append((v, w))
                    disc[w] = low[w] = timer
                    timer += 1
                    stack.append((w, v, iter(g.neighbors(w))))
                    pushed = True
                    break
                if disc[w] < disc[v]:
                    estack.append((v, w))
                    if disc[w] < low[v]:
                        low[v] = disc[w]
            if pushed:
                continue
            stack.pop()
            if not stack:
                continue
            u = stack[-1][0]
            if low[v] < low[u]:
                low[u] = low[v]
            if low[v] >= disc[u]:
                comp = []
                while estack[-1] != (u, v):
                    comp.append(estack.pop())
                comp.append(estack.pop())
                edge_blocks.append(comp)
                if u == start:
                    root_pops += 1
                else:
                    cuts.add(u)
        if root_pops > 1:
            cuts.add(start)
    return edge_blocks, cuts, isolated


def blocks(g: Multigraph) -> BlockDecomposition:
    """Biconnected blocks, cut vertices, and a classification of every block.

    Runs on the underlying simple graph, so two vertices joined by parallel
    edges form a complete (K_2-power) block rather than a 2-cycle.
    """
    edge_blocks, cuts, isolated = _articulation_data(g)
    vertex_sets = [tuple(sorted({x for e in comp for x in e})) for comp in edge_blocks]
    vertex_sets.extend((v,) for v in isolated)
    vertex_sets.sort()
    classifications = tuple(classify_block(g.induced(vs)) for vs in vertex_sets)
    return BlockDecomposition(tuple(vertex_sets), tuple(sorted(cuts)), classifications)


def classify_block(b: Multigraph):
    """Classify a block as CompletePower, CyclePower, or Other.

    Ties go to CompletePower: a uniform triangle is reported CompletePower(3, k),
    so CyclePower always has n >= 4.  A single vertex is CompletePower(1, 1).
    """
    n = b.n
    if n == 1:
        return CompletePower(1, 1)
    if not b.is_connected():
        raise ValueError("not a block: disconnected")
    if n >= 3:
        _, cuts, _ = _articulation_data(b)
        if cuts:
            raise ValueError("not a block: contains a cut vertex")
    mults = {k for (_, _, k) in b.pairs()}
    if len(mults) != 1:
        return Other()
    k = mults.pop()
    npairs = len(b._mult)
    if npairs == n * (n - 1) // 2:
        return CompletePower(n, k)
    if n >= 4 and npairs == n and all(len(b.neighbors(v)) == 2 for v in b.vertices()):
        return CyclePower(n, k)
    return Other()


# -- text format ----------------------------------------------------------------
#
# First line: n.  Then one line "u v k" per vertex pair with k = multiplicity >= 1.
# Whitespace-separated, 1-indexed, pairs unordered and unique.


def parse_multigraph(text: str) -> Multigraph:
    lines = text.splitlines()
    n = None
    mult = {}
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
        if len(parts) != 3:
            raise ParseError("expected 'u v k'", lineno)
        try:
            u, v, k = (int(p) for p in parts)
        except ValueError:
            raise ParseError(f"non-integer entry in {raw.strip()!r}", lineno) from None
        if u == v:
            raise ParseError(f"loop at vertex {u}", lineno)
        if not (1 <= u <= n and 1 <= v <= n):
            raise ParseError(f"vertex out of range in ({u}, {v})", lineno)
        if k < 1:
            raise ParseError("multiplicity must be at least 1", lineno)
        key = (u, v) if u < v else (v, u)
        if key in mult:
            raise ParseError(f"duplicate pair {key}", lineno)
        mult[key] = k
    if n is None:
        raise ParseError("empty input: missing vertex count")
    return Multigraph(n, mult)


def format_multigraph(g: Multigraph) -> str:
    lines = [str(g.n)]
    lines.extend(f"{u} {v} {k}" for u, v, k in g.pairs())
    return "\n".join(lines) + "\n"
