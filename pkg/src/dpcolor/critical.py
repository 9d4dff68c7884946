"""Criticality checks and exact-arithmetic edge-count bounds.

All bound arithmetic uses fractions.Fraction; nothing here ever passes or
fails by floating-point rounding.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .config import DEFAULT, Config
from .multigraph import CompletePower, CyclePower, Multigraph, Other, blocks
from .solver import chi_dp, find_uncolorable_cover


@dataclass(frozen=True)
class CriticalityReport:
    is_critical: bool
    chi: int
    failing_subgraph: tuple | None  # ("edge", u, v) or ("vertex", v)


class GdpPrecondition(ValueError):
    """A GDP-tree bound precondition failed; .reason says which one."""

    def __init__(self, reason, message):
        super().__init__(message)
        self.reason = reason  # "not-gdp-tree" | "max-degree" | "contains-complete"


def check_critical(g: Multigraph, k: int, config: Config = DEFAULT) -> CriticalityReport:
    """Is g exactly at DP-chromatic number k with every deletion dropping it?

    Single-edge deletions suffice: every proper sub-multigraph sits inside
    some single-edge-deleted one and the DP-chromatic number is monotone
    under sub-multigraphs.  The one exception is an edgeless multigraph,
    whose only proper subgraphs are vertex-deleted; those are handled
    directly.  For small graphs (n <= config.vertex_deletion_max_n) vertex
    deletions are re-checked anyway, as a belt-and-suspenders measure.
    """
    if k < 1:
        raise ValueError("k must be positive")
    chi = chi_dp(g, config)
    if chi != k:
        return CriticalityReport(False, chi, None)
    if g.edge_total() == 0:
        # no edges to delete; vertex deletion keeps the chromatic number at 1
        return CriticalityReport(g.n == 1, chi, None if g.n == 1 else ("vertex", 1))
    for u, v, _ in g.pairs():
        smaller = g.delete_single_edge(u, v)
        if k > 1 and find_uncolorable_cover(smaller, k - 1, config) is not None:
            return CriticalityReport(False, chi, ("edge", u, v))
    if g.n <= config.vertex_deletion_max_n and k > 1:
        for v in g.vertices():
            if g.n == 1:
                break
            smaller = g.delete_vertex(v)
            if find_uncolorable_cover(smaller, k - 1, config) is not None:
                return CriticalityReport(False, chi, ("vertex", v))
    return CriticalityReport(True, chi, None)


def check_bound_multigraph(g: Multigraph, k: int) -> tuple[bool, Fraction]:
    """Slack of the multigraph edge bound: 2|E| - (k-1) n, as an exact rational.

    Nonnegative slack is what DP-k-criticality forces; slack 0 is equality.
    The bound itself is checked syntactically; criticality is the caller's
    claim.
    """
    slack = Fraction(2 * g.edge_total() - (k - 1) * g.n)
    return slack >= 0, slack


def simple_critical_coefficient(k: int) -> Fraction:
    """Edge-density coefficient (k - 1) + (k - 3)/(k^2 - 3) for simple graphs."""
    if k < 4:
        raise ValueError("coefficient defined for k >= 4")
    return (k - 1) + Fraction(k - 3, k * k - 3)


def check_bound_simple(g: Multigraph, k: int) -> tuple[bool, Fraction]:
    """Slack of the strengthened simple-graph bound at k >= 4.

    slack = 2|E| - ((k-1) + (k-3)/(k^2-3)) n, exact.  Rejects non-simple
    input and the complete graph on k vertices, which the bound excludes.
    """
    if k < 4:
        raise ValueError("bound defined for k >= 4")
    if not g.is_simple():
        raise ValueError("bound applies to simple graphs")
    if g.n == k and len(g.pairs()) == k * (k - 1) // 2:
        raise ValueError("bound excludes the complete graph on k vertices")
    slack = 2 * g.edge_total() - simple_critical_coefficient(k) * g.n
    return slack >= 0, slack


def _block_shapes(g: Multigraph):
    if not g.is_simple():
        raise ValueError("expected a simple graph")
    if not g.is_connected():
        raise ValueError("expected a connected graph")
    return blocks(g)


def is_gdp_tree(g: Multigraph) -> bool:
    """Every block is a complete graph or a cycle (any length)."""
    return all(not isinstance(c, Other) for c in _block_shapes(g).classifications)


def is_gallai_tree(g: Multigraph) -> bool:
    """Every block is a complete graph or an odd cycle."""
    for c in _block_shapes(g).classifications:
        if isinstance(c, Other):
            return False
        if isinstance(c, CyclePower) and c.n % 2 == 0:
            return False
    return True


def check_gdp_edge_bound(t: Multigraph, k: int) -> tuple[bool, Fraction]:
    """Slack of the GDP-tree edge bound: ((k-2) + 2/(k-1)) n - 2|E|, exact.

    Preconditions (each reported distinctly via GdpPrecondition): t is a
    GDP-tree, max degree at most k-1, and no complete subgraph on k vertices.
    Under them the slack is nonnegative.
    """
    if k < 4:
        raise ValueError("bound defined for k >= 4")
    dec = _block_shapes(t)
    if any(isinstance(c, Other) for c in dec.classifications):
        raise GdpPrecondition("not-gdp-tree", "a block is neither complete nor a cycle")
    if t.max_degree() > k - 1:
        raise GdpPrecondition("max-degree",
                              f"maximum degree {t.max_degree()} exceeds {k - 1}")
    # complete subgraphs live inside blocks, so a K_k means a complete block
    # on >= k vertices
    largest = max((c.n for c in dec.classifications if isinstance(c, CompletePower)),
                  default=0)
    if largest >= k:
        raise GdpPrecondition("contains-complete",
                              f"contains a complete subgraph on {largest} >= {k} vertices")
    slack = (k - 2 + Fraction(2, k - 1)) * t.n - 2 * t.edge_total()
    return slack >= 0, slack
