"""Degree-colorability decided from block structure, with witness covers.

A connected multigraph admits an uncolorable degree cover exactly when every
block is a uniform power of a complete graph or of a cycle.  The decision is
purely structural (block decomposition plus classification); when the answer
is negative, an explicit uncolorable degree cover is assembled from the
per-block constructions by concatenating lists at the cut vertices.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cover import Cover, build_bad_complete, build_bad_cycle, validate_cover
from .errors import InternalInvariantError
from .multigraph import CompletePower, CyclePower, Multigraph, Other, blocks


@dataclass(frozen=True)
class DegreeColorabilityVerdict:
    colorable: bool
    reason: tuple        # (block vertex tuple, classification) per block
    witness: Cover | None

    def __post_init__(self):
        if self.colorable and self.witness is not None:
            raise ValueError("colorable verdicts carry no witness")


@dataclass(frozen=True)
class ComponentVerdict:
    vertices: tuple      # component vertices in the original labeling
    verdict: DegreeColorabilityVerdict  # for the component relabeled 1..m


def _cycle_order(g: Multigraph, vs):
    """Vertices of a cycle block in traversal order, starting at the smallest
    vertex and moving toward its smaller neighbor."""
    vset = set(vs)
    start = min(vs)
    nbrs = [w for w in g.neighbors(start) if w in vset]
    order = [start, min(nbrs)]
    while len(order) < len(vs):
        cur, prev = order[-1], order[-2]
        nxt = [w for w in g.neighbors(cur) if w in vset and w != prev]
        order.append(nxt[0])
    return order


def _block_cover(g: Multigraph, vs, cls):
    """Uncolorable degree cover of one block, keyed by original vertex labels.

    Returns (sizes: {vertex: list size}, cross: {(u, v): set of index pairs}).
    """
    if isinstance(cls, CompletePower):
        if cls.n == 1:
            return {vs[0]: 0}, {}
        local = build_bad_complete(cls.n, cls.k)
        labels = sorted(vs)
    elif isinstance(cls, CyclePower):
        local = build_bad_cycle(cls.n, cls.k)
        labels = _cycle_order(g, vs)
    else:
        raise ValueError("no witness construction for an unstructured block")
    sizes = {labels[v - 1]: local.size(v) for v in range(1, len(labels) + 1)}
    cross = {}
    for (u, v), edges in local.cross.items():
        a, b = labels[u - 1], labels[v - 1]
        if a < b:
            cross[(a, b)] = set(edges)
        else:
            cross[(b, a)] = {(j, i) for i, j in edges}
    return sizes, cross


def _merge_block_covers(g: Multigraph, per_block):
    """Combine per-block degree covers into one cover of g.

    A cut vertex's list is the concatenation of its lists across blocks (in
    block order), so its size becomes the full degree; the implicit clique on
    the merged list is what makes the combination uncolorable whenever every
    part is.
    """
    offsets = {}
    sizes = [0] * g.n
    for bi, (bsizes, _) in enumerate(per_block):
        for v, s in bsizes.items():
            offsets[(v, bi)] = sizes[v - 1]
            sizes[v - 1] += s
    cross = {}
    for bi, (_, bcross) in enumerate(per_block):
        for (u, v), edges in bcross.items():
            du, dv = offsets[(u, bi)], offsets[(v, bi)]
            cross.setdefault((u, v), set()).update(
                (i + du, j + dv) for i, j in edges)
    return Cover(g, tuple(sizes), cross)


def decide_degree_colorable(g: Multigraph,
                            build_witness: bool = True) -> DegreeColorabilityVerdict:
    """Decide whether a connected multigraph is colorable under every degree
    cover, in polynomial time, from its block classification.

    Not colorable exactly when all blocks classify as CompletePower or
    CyclePower; the verdict then carries an uncolorable degree cover unless
    build_witness is off.  Note that trees land on the negative side: every
    block of a tree is a 2-vertex complete graph.
    """
    if not g.is_connected():
        raise ValueError("decision is defined for connected multigraphs; "
                         "use decide_degree_colorable_any")
    dec = blocks(g)
    reason = tuple(zip(dec.blocks, dec.classifications))
    if any(isinstance(c, Other) for c in dec.classifications):
        return DegreeColorabilityVerdict(True, reason, None)
    if not build_witness:
        return DegreeColorabilityVerdict(False, reason, None)
    per_block = [_block_cover(g, vs, cls) for vs, cls in reason]
    witness = _merge_block_covers(g, per_block)
    if witness.list_sizes != g.degrees():
        raise InternalInvariantError("witness is not a degree cover")
    viol = validate_cover(witness)
    if viol is not None:
        raise InternalInvariantError(f"witness fails validation: {viol}")
    return DegreeColorabilityVerdict(False, reason, witness)


def decide_degree_colorable_any(g: Multigraph,
                                build_witness: bool = True):
    """Per-component verdicts for an arbitrary multigraph.

    A cover restricts independently to components, so the whole multigraph is
    degree-colorable iff every component is.
    """
    out = []
    for comp in g.components():
        sub = g.induced(comp)
        out.append(ComponentVerdict(comp, decide_degree_colorable(sub, build_witness)))
    return tuple(out)


def assemble_witness(g: Multigraph, component_verdicts) -> Cover | None:
    """Uncolorable degree cover of the whole multigraph, or None if every
    component is degree-colorable.

    Components with an uncolorable cover contribute it verbatim; the rest get
    degree-sized lists with no cross edges (a valid degree cover), which
    leaves the combination uncolorable.
    """
    if all(cv.verdict.colorable for cv in component_verdicts):
        return None
    sizes = [0] * g.n
    cross = {}
    for cv in component_verdicts:
        comp = cv.vertices  # sorted ascending, so pair order is preserved
        witness = cv.verdict.witness
        if cv.verdict.colorable or witness is None:
            for v in comp:
                sizes[v - 1] = g.degree(v)
            continue
        for local, orig in enumerate(comp, start=1):
            sizes[orig - 1] = witness.size(local)
        for (u, v), edges in witness.cross.items():
            cross[(comp[u - 1], comp[v - 1])] = set(edges)
    return Cover(g, tuple(sizes), cross)
