"""Exact colorability decisions over covers.

Two engines live here:

* ``solve`` decides whether one given cover admits a transversal, by
  backtracking over vertices with minimum-remaining-domain ordering and
  forward pruning.  Answers are exact: "uncolorable" always means the search
  space was exhausted, never that a budget ran out (budget aborts raise).

* ``find_uncolorable_cover`` searches for a cover with prescribed list sizes
  that admits no transversal at all.  Rather than enumerating covers and
  solving each, it works over "cells": a cell (u, i, v, j) is a cross edge
  between color i of u and color j of v, and it blocks exactly the
  transversals choosing both colors.  The search grows a set of cells subject
  to the per-pair bipartite degree caps until every transversal is blocked
  (an uncolorable cover) or all branches are exhausted (none exists).
  Branching always targets one still-unblocked transversal, so each level
  commits to how that transversal dies; sibling branches ban the cells
  already tried, which keeps the explored solution sets disjoint.  Counting
  bounds on how many transversals the remaining cell capacity can still
  block prune hopeless branches.  Spanning-tree gauge fixing shrinks the
  space: along a BFS tree, a single-multiplicity pair reaching a fresh
  vertex may be assumed to use only diagonal cells, because relabeling that
  vertex's list maps any matching onto the diagonal.

chi_dp and the degree-colorability oracle are thin wrappers over the cell
search.  All functions are pure and reentrant; independent instances can be
handed to parallel workers.
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass

from .config import DEFAULT, Config
from .cover import Cover, Transversal, validate_cover, _spanning_forest
from .errors import CapExceeded, CoverInvalid, InternalInvariantError
from .multigraph import Multigraph


@dataclass(frozen=True)
class SolveResult:
    colorable: bool
    transversal: Transversal | None
    nodes_explored: int
    time: float


def check_transversal(cover: Cover, t) -> bool:
    """True iff the transversal avoids every cross edge of the cover."""
    choice = t.choice if isinstance(t, Transversal) else tuple(t)
    if len(choice) != cover.base.n:
        raise ValueError("transversal length does not match vertex count")
    for v, idx in enumerate(choice, start=1):
        if not 1 <= idx <= cover.size(v):
            raise ValueError(f"color index {idx} out of range for vertex {v}")
    for (u, v), edges in cover.cross.items():
        if (choice[u - 1], choice[v - 1]) in edges:
            return False
    return True


def _neighbor_masks(cover: Cover):
    """nbr[v][u][i-1] = bitmask of u-colors conflicting with color (v, i)."""
    n = cover.base.n
    nbr = {v: {} for v in range(1, n + 1)}
    for (u, v), edges in cover.cross.items():
        mu = nbr[u].setdefault(v, [0] * cover.size(u))
        mv = nbr[v].setdefault(u, [0] * cover.size(v))
        for i, j in edges:
            mu[i - 1] |= 1 << (j - 1)
            mv[j - 1] |= 1 << (i - 1)
    return nbr


def solve(cover: Cover, config: Config = DEFAULT) -> SolveResult:
    """Exact transversal search; deterministic given the cover.

    Vertices are chosen by smallest remaining domain (ties to the lowest
    vertex) and colors tried in index order.  Raises CoverInvalid for covers
    that fail validation and CapExceeded when the node budget runs out.
    """
    viol = validate_cover(cover)
    if viol is not None:
        raise CoverInvalid(str(viol))
    start = time.perf_counter()
    n = cover.base.n
    nbr = _neighbor_masks(cover)
    domains = [(1 << cover.size(v)) - 1 for v in range(1, n + 1)]
    chosen = [0] * n
    unassigned = set(range(1, n + 1))
    nodes = 0
    budget = config.node_budget

    def rec():
        nonlocal nodes
        if not unassigned:
            return True
        v = min(unassigned, key=lambda x: (bin(domains[x - 1]).count("1"), x))
        dom = domains[v - 1]
        if dom == 0:
            return False
        unassigned.remove(v)
        masks = nbr[v]
        while dom:
            bit = dom & -dom
            dom &= dom - 1
            i = bit.bit_length()
            nodes += 1
            if nodes > budget:
                raise CapExceeded(f"solve exceeded node budget {budget}")
            chosen[v - 1] = i
            saved = []
            ok = True
            for u, umasks in masks.items():
                if u in unassigned:
                    saved.append((u, domains[u - 1]))
                    domains[u - 1] &= ~umasks[i - 1]
                    if domains[u - 1] == 0:
                        ok = False
            if ok and rec():
                return True
            for u, old in saved:
                domains[u - 1] = old
        chosen[v - 1] = 0
        unassigned.add(v)
        return False

    ok = rec()
    elapsed = time.perf_counter() - start
    t = Transversal(tuple(chosen)) if ok else None
    return SolveResult(ok, t, nodes, elapsed)


def greedy_color(cover: Cover, order) -> Transversal | None:
    """Color vertices in the given order, always taking the lowest color not
    conflicting with already-chosen colors.  Returns None on failure.

    Succeeds whenever every vertex, at its turn, has fewer committed
    cross-neighbors than list size; in particular for any cover with list
    sizes above the degeneracy when the order reverses an elimination order.
    """
    seq = list(order)
    n = cover.base.n
    if sorted(seq) != list(range(1, n + 1)):
        raise ValueError("order must be a permutation of the vertices")
    nbr = _neighbor_masks(cover)
    avail = [(1 << cover.size(v)) - 1 for v in range(1, n + 1)]
    chosen = [0] * n
    done = set()
    for v in seq:
        dom = avail[v - 1]
        if dom == 0:
            return None
        i = (dom & -dom).bit_length()
        chosen[v - 1] = i
        done.add(v)
        for u, umasks in nbr[v].items():
            if u not in done:
                avail[u - 1] &= ~umasks[i - 1]
    return Transversal(tuple(chosen))


# -- search for an uncolorable cover -------------------------------------------


def _normalize_sizes(g: Multigraph, list_sizes):
    if isinstance(list_sizes, int):
        return (list_sizes,) * g.n
    sizes = tuple(list_sizes)
    if len(sizes) != g.n:
        raise ValueError("need one list size per vertex")
    if any(s < 0 for s in sizes):
        raise ValueError("list sizes must be nonnegative")
    return sizes


def find_uncolorable_cover(g: Multigraph, list_sizes,
                           config: Config = DEFAULT) -> Cover | None:
    """Find a cover of g with the given list sizes and no transversal.

    list_sizes is a single int (uniform lists) or one size per vertex.
    Returns None when every such cover is colorable; the search is complete.
    An emitted cover has each pair's cross edges completed to a union of
    exactly multiplicity(u, v) maximum matchings, which preserves
    uncolorability, and is deterministic for a given input.
    """
    sizes = _normalize_sizes(g, list_sizes)
    if any(s == 0 for s in sizes):
        return Cover(g, sizes, {})  # an empty list already blocks every transversal
    space = 1
    for s in sizes:
        space *= s
        if space > config.max_transversal_space:
            raise CapExceeded(
                f"transversal space exceeds cap {config.max_transversal_space}")
    chosen = _search_blocking_cells(g, sizes, config)
    if chosen is None:
        return None
    cross = _complete_to_maximal(g, sizes, chosen)
    return Cover(g, sizes, cross)


def _search_blocking_cells(g: Multigraph, sizes, config: Config):
    """Core complete search; returns {pair: set of cells} or None.

    The surviving-transversal set lives in one big integer, bit b standing
    for the transversal with mixed-radix index b; each cell owns a fixed
    cylinder mask, so blocking is a single AND-NOT and all counting runs on
    popcounts.
    """
    n = g.n
    plist = g.pairs()
    P = len(plist)
    pu = [p[0] for p in plist]
    pv = [p[1] for p in plist]
    pm = [p[2] for p in plist]
    tree = _spanning_forest(g)
    diag = []
    for u, v, m in plist:
        child = tree.get((u, v))
        if child is None or m != 1:
            diag.append(False)
            continue
        parent = u if child == v else v
        diag.append(sizes[parent - 1] <= sizes[child - 1])

    space = 1
    for s in sizes:
        space *= s
    nbytes = (space + 7) // 8
    cell_bytes = [dict() for _ in range(P)]
    class_bytes = [None] + [[bytearray(nbytes) for _ in range(sizes[v - 1])]
                            for v in range(1, n + 1)]
    for idx, t in enumerate(itertools.product(*[range(1, s + 1) for s in sizes])):
        byte, bit = idx >> 3, 1 << (idx & 7)
        for p in range(P):
            cell = (t[pu[p] - 1], t[pv[p] - 1])
            arr = cell_bytes[p].get(cell)
            if arr is None:
                arr = cell_bytes[p][cell] = bytearray(nbytes)
            arr[byte] |= bit
        for v in range(1, n + 1):
            class_bytes[v][t[v - 1] - 1][byte] |= bit
    cellmask = [{cell: int.from_bytes(arr, "little") for cell, arr in cb.items()}
                for cb in cell_bytes]
    classmask = [None] + [[int.from_bytes(arr, "little") for arr in class_bytes[v]]
                          for v in range(1, n + 1)]
    strides = [0] * (n + 1)
    st = 1
    for v in range(n, 0, -1):
        strides[v] = st
        st *= sizes[v - 1]

    pairs_at = [None] + [[] for _ in range(n)]
    for p in range(P):
        pairs_at[pu[p]].append((p, 0))
        pairs_at[pv[p]].append((p, 1))

    rowdeg = [dict() for _ in range(P)]
    coldeg = [dict() for _ in range(P)]
    taken = [set() for _ in range(P)]
    banned = [set() for _ in range(P)]
    nodes = 0
    budget = config.node_budget
    solution = {}

    def addable(p, cell):
        i, j = cell
        if diag[p] and i != j:
            return False
        if cell in banned[p] or cell in taken[p]:
            return False
        return rowdeg[p].get(i, 0) < pm[p] and coldeg[p].get(j, 0) < pm[p]

    def decode(idx):
        return tuple(idx // strides[v] % sizes[v - 1] + 1 for v in range(1, n + 1))

    def pruned(S, mus):
        """Counting bounds: can the remaining cell capacity still block S?

        mus[p] maps a cell to its current kill count.  Three sound tests, each
        optimistic about overlaps: a global capacity bound, a per-vertex-color
        one (a transversal choosing color c at v dies to a row-c cell at v or
        to a pair elsewhere), and a per-pair-cell refinement whose leftover
        demand only pairs disjoint from both endpoints can serve.
        """
        live = S.bit_count()
        bounds = []
        for p in range(P):
            m = pm[p]
            rd, cd = rowdeg[p], coldeg[p]
            rows, cols, all_mus = {}, {}, []
            for cell, mu in mus[p].items():
                if mu == 0 or not addable(p, cell):
                    continue
                i, j = cell
                rows.setdefault(i, []).append(mu)
                cols.setdefault(j, []).append(mu)
                all_mus.append(mu)
            row_per, col_per = {}, {}
            row_sum = col_sum = 0
            for i, lst in rows.items():
                lst.sort(reverse=True)
                s = sum(lst[:m - rd.get(i, 0)])
                row_per[i] = s
                row_sum += s
            for j, lst in cols.items():
                lst.sort(reverse=True)
                s = sum(lst[:m - cd.get(j, 0)])
                col_per[j] = s
                col_sum += s
            free = min(m * sizes[pu[p] - 1], m * sizes[pv[p] - 1]) - len(taken[p])
            if free <= 0:
                bounds.append((0, row_per, col_per))
                continue
            all_mus.sort(reverse=True)
            bounds.append((min(row_sum, col_sum, sum(all_mus[:free])),
                           row_per, col_per))
        total = sum(b[0] for b in bounds)
        if total < live:
            return True
        for v in range(1, n + 1):
            ps = pairs_at[v]
            if not ps:
                continue
            nonv = total - sum(bounds[p][0] for p, _ in ps)
            deficit = 0
            masks = classmask[v]
            for c in range(sizes[v - 1]):
                need = (S & masks[c]).bit_count()
                if need == 0:
                    continue
                avail = 0
                for p, side in ps:
                    avail += bounds[p][side + 1].get(c + 1, 0)
                if need > avail:
                    deficit += need - avail
                    if deficit > nonv:
                        return True
        for p in range(P):
            u, v = pu[p], pv[p]
            outside = total
            for q, _ in pairs_at[u]:
                outside -= bounds[q][0]
            for q, _ in pairs_at[v]:
                if pu[q] != u and pv[q] != u:
                    outside -= bounds[q][0]
            u_row = {}
            for q, side in pairs_at[u]:
                if q != p:
                    for c, s in bounds[q][side + 1].items():
                        u_row[c] = u_row.get(c, 0) + s
            v_row = {}
            for q, side in pairs_at[v]:
                if q != p:
                    for c, s in bounds[q][side + 1].items():
                        v_row[c] = v_row.get(c, 0) + s
            deficit = 0
            for cell, mu in mus[p].items():
                if mu == 0:
                    continue
                avail = (mu if addable(p, cell) else 0) + \
                    u_row.get(cell[0], 0) + v_row.get(cell[1], 0)
                if mu > avail:
                    deficit += mu - avail
                    if deficit > outside:
                        return True
        return False

    def rec(S):
        nonlocal nodes
        nodes += 1
        if nodes > budget:
            raise CapExceeded(f"cover search exceeded node budget {budget}")
        if S == 0:
            for p in range(P):
                solution[(pu[p], pv[p])] = set(taken[p])
            return True
        mus = [{cell: (S & mask).bit_count() for cell, mask in cellmask[p].items()}
               for p in range(P)]
        if pruned(S, mus):
            return False
        # coverage masks: t & cover[p] != 0 iff pair p can still block t
        cover = []
        for p in range(P):
            acc = 0
            for cell, mask in cellmask[p].items():
                if mus[p][cell] and addable(p, cell):
                    acc |= mask
            cover.append(acc)
        # partition S by how many pairs can still block each transversal
        by_count = [S]
        for p in range(P):
            c = cover[p]
            nxt = [by_count[0] & ~c]
            for k in range(1, len(by_count)):
                nxt.append((by_count[k] & ~c) | (by_count[k - 1] & c))
            nxt.append(by_count[-1] & c)
            by_count = nxt
        if by_count[0]:
            return False  # some transversal can never be blocked
        # fail-first: branch on a transversal with the fewest blocking options
        target = 0
        for k in range(1, P + 1):
            if by_count[k]:
                target = by_count[k] & -by_count[k]
                break
        t = decode(target.bit_length() - 1)
        opts = []
        for p in range(P):
            cell = (t[pu[p] - 1], t[pv[p] - 1])
            if addable(p, cell):
                opts.append((-mus[p][cell], p, cell))
        opts.sort()
        newly_banned = []
        found = False
        for _, p, cell in opts:
            i, j = cell
            rowdeg[p][i] = rowdeg[p].get(i, 0) + 1
            coldeg[p][j] = coldeg[p].get(j, 0) + 1
            taken[p].add(cell)
            ok = rec(S & ~cellmask[p][cell])  # solution is copied at the leaf
            taken[p].remove(cell)
            rowdeg[p][i] -= 1
            coldeg[p][j] -= 1
            if ok:
                found = True
                break
            banned[p].add(cell)
            newly_banned.append((p, cell))
        for p, cell in newly_banned:
            banned[p].discard(cell)
        return found

    full = (1 << space) - 1
    return solution if rec(full) else None


def _edge_color_bipartite(edges, m):
    """Partition a bipartite edge set with max degree <= m into m matchings.

    Classic alternating-path edge coloring.  Returns m dicts mapping row
    color to column color (some possibly empty).
    """
    row_color = {}  # (row, c) -> col
    col_color = {}  # (col, c) -> row
    assign = {}
    for i, j in sorted(edges):
        alpha = next(c for c in range(m) if (i, c) not in row_color)
        if (j, alpha) in col_color:
            beta = next(c for c in range(m) if (j, c) not in col_color)
            # walk the alpha/beta alternating path starting at column j; it
            # cannot reach row i because alpha is free there
            path = []
            col = j
            while (col, alpha) in col_color:
                r = col_color[(col, alpha)]
                path.append((r, col, alpha))
                if (r, beta) not in row_color:
                    break
                col = row_color[(r, beta)]
                path.append((r, col, beta))
            for r, c_, old in path:
                del row_color[(r, old)]
                del col_color[(c_, old)]
            for r, c_, old in path:
                new = beta if old == alpha else alpha
                row_color[(r, new)] = c_
                col_color[(c_, new)] = r
                assign[(r, c_)] = new
        assign[(i, j)] = alpha
        row_color[(i, alpha)] = j
        col_color[(j, alpha)] = i
    matchings = [dict() for _ in range(m)]
    for (i, j), c in assign.items():
        matchings[c][i] = j
    return matchings


def _complete_to_maximal(g: Multigraph, sizes, chosen):
    """Extend chosen cells per pair to unions of exactly m maximum matchings."""
    cross = {}
    for u, v, m in g.pairs():
        a, b = sizes[u - 1], sizes[v - 1]
        edges = sorted(chosen.get((u, v), ()))
        union = set()
        for match in _edge_color_bipartite(edges, m):
            used_rows = set(match)
            used_cols = set(match.values())
            free_rows = [i for i in range(1, a + 1) if i not in used_rows]
            free_cols = [j for j in range(1, b + 1) if j not in used_cols]
            for i, j in zip(free_rows, free_cols):
                match[i] = j
            union.update(match.items())
        cross[(u, v)] = union
    return cross


# -- high-level decisions ------------------------------------------------------


def chi_dp(g: Multigraph, config: Config = DEFAULT) -> int:
    """Smallest k such that every cover of g with k-lists has a transversal.

    Tries k = 1, 2, ... and returns the first k with no uncolorable cover.
    Greedy coloring guarantees degeneracy + 1 always works, which caps the
    loop; reaching the cap without an answer would be an internal error.
    """
    cap = g.degeneracy() + 1
    for k in range(1, cap + 1):
        if find_uncolorable_cover(g, k, config) is None:
            return k
    raise InternalInvariantError(
        f"no answer up to degeneracy bound {cap}; greedy guarantee violated")


def degree_colorable_oracle(g: Multigraph,
                            config: Config = DEFAULT) -> tuple[bool, Cover | None]:
    """Exhaustive ground truth for degree-colorability of a connected multigraph.

    Returns (True, None) when every cover with list sizes equal to the
    degrees admits a transversal, else (False, witness) with a deterministic
    uncolorable degree cover whose pairs are unions of maximum matchings.
    Covers with larger lists never matter: dropping the surplus colors of an
    uncolorable cover leaves even fewer transversal candidates, so it stays
    uncolorable, and the result has exactly the degree sizes.  The witness is
    re-verified with the solver unless config.verify_witnesses is off.
    """
    if not g.is_connected():
        raise ValueError("oracle needs a connected multigraph")
    total = sum(g.degrees())
    if total > config.max_total_degree:
        raise CapExceeded(f"total degree {total} exceeds cap {config.max_total_degree}")
    witness = find_uncolorable_cover(g, g.degrees(), config)
    if witness is None:
        return True, None
    if config.verify_witnesses:
        viol = validate_cover(witness)
        if viol is not None:
            raise InternalInvariantError(f"witness fails validation: {viol}")
        if solve(witness, config).colorable:
            raise InternalInvariantError("witness unexpectedly colorable")
    return False, witness
