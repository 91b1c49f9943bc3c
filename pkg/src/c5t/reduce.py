"""Triangle-to-edge reduction: one selected edge per triangle, giving a {C4,C5}-free subgraph."""
from __future__ import annotations

from dataclasses import dataclass, field

from .blocks import Crown, Invalid, K4Block, BlockDecomposition, decompose_blocks, strip_nontriangle_edges
from .detect import enumerate_triangles, find_c4, find_c5, girth
from .errors import C5Present, ContractViolation, Verification
from .graph import Edge, Graph, Triangle, edge


@dataclass
class ReductionResult:
    g0: Graph
    assignment: dict[Triangle, Edge]
    stripped: Graph
    decomposition: BlockDecomposition
    stats: dict[str, int] = field(default_factory=dict)


def crown_selection(base: Edge, apexes) -> dict[Triangle, Edge]:
    a, b = base
    return {Triangle.of(a, b, c): edge(a, c) for c in apexes}


def k4_selection(vertices) -> dict[Triangle, Edge]:
    a, b, c, d = sorted(vertices)
    # edges ab, bc, ac, ad; each matched to a triangle containing it
    return {
        Triangle(a, b, d): (a, b),
        Triangle(b, c, d): (b, c),
        Triangle(a, b, c): (a, c),
        Triangle(a, c, d): (a, d),
    }


def select_edges(g: Graph) -> ReductionResult:
    """Strip g, decompose into blocks, and pick edges per block.

    Crown with base (a, b), a < b: edges a-c_i. K4 on a<b<c<d: ab, bc, ac, ad.
    Raises C5Present if g has a C5.
    """
    witness = find_c5(g)
    if witness is not None:
        raise C5Present(witness)
    stripped = strip_nontriangle_edges(g)
    dec = decompose_blocks(stripped)
    assignment: dict[Triangle, Edge] = {}
    for block in dec.blocks:
        kind = block.kind
        if isinstance(kind, Crown):
            chosen = crown_selection(kind.base, kind.apexes)
        elif isinstance(kind, K4Block):
            chosen = k4_selection(kind.vertices)
        else:
            assert isinstance(kind, Invalid)
            raise ContractViolation(f"block {block.id} unclassifiable on a C5-free graph")
        if len(chosen) != len(block.triangles) or set(chosen) != set(block.triangles):
            raise ContractViolation(f"block {block.id}: selection does not cover its triangles")
        assignment.update(chosen)

    g0 = Graph(g.n)
    for e in assignment.values():
        if not g0.add_edge(*e):
            raise ContractViolation(f"edge {e} selected twice")
    t = len(dec.assignment)
    if g0.m != t:
        raise ContractViolation(f"|E(G0)| = {g0.m} but t = {t}")
    if find_c4(g0) is not None or find_c5(g0) is not None:
        raise ContractViolation("selected subgraph contains a C4 or C5")
    stats = {"n": g.n, "m": g.m, "stripped_m": stripped.m, "triangles": t, "g0_edges": g0.m}
    return ReductionResult(g0, assignment, stripped, dec, stats)


def verify_reduction(g: Graph, r: ReductionResult) -> Verification:
    """Re-check a reduction from scratch without trusting select_edges."""
    host = Graph(g.n)
    triangles = enumerate_triangles(g)
    for t in triangles:
        for e in t.edges():
            host.add_edge(*e)
    selected = list(r.assignment.values())
    g0_edges = set(r.g0.edges())
    c4 = find_c4(r.g0)
    c5 = find_c5(r.g0)
    checks = {
        "subgraph": r.g0.subgraph_of(host),
        "bijection": set(r.assignment) == set(triangles)
        and len(selected) == len(set(selected))
        and set(selected) == g0_edges
        and all(e[0] in t and e[1] in t for t, e in r.assignment.items()),
        "edge_count": r.g0.m == len(triangles),
        "c4_free": c4 is None,
        "c5_free": c5 is None,
    }
    details = {"triangles": len(triangles), "g0_edges": r.g0.m, "g0_girth": girth(r.g0)}
    if c4 is not None:
        details["c4_witness"] = list(c4)
    if c5 is not None:
        details["c5_witness"] = list(c5)
    return Verification("reduction", all(checks.values()), checks, details)
