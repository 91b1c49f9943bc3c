"""Triangle blocks: strip, partition, classify as crown or K4, check both claims."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Union

from .detect import (
    CycleWitness,
    canonical_cycle,
    count_triangles,
    enumerate_triangles,
    find_c5,
    iter_c4,
)
from .errors import ContractViolation, Verification
from .graph import Edge, Graph, Triangle


@dataclass(frozen=True)
class Crown:
    base: Edge
    apexes: tuple[int, ...]

    kind = "crown"


@dataclass(frozen=True)
class K4Block:
    vertices: tuple[int, int, int, int]

    kind = "k4"


@dataclass(frozen=True)
class Invalid:
    reason: str
    c5_witness: Optional[CycleWitness]
    # False when the only C5 found lies partly outside the block's vertices.
    witness_in_block: bool = False

    kind = "invalid"


BlockKind = Union[Crown, K4Block, Invalid]


@dataclass
class Block:
    id: int
    triangles: list[Triangle]
    kind: BlockKind
    edge_set: frozenset[Edge]

    @property
    def vertices(self) -> list[int]:
        return sorted({v for t in self.triangles for v in t})


@dataclass
class BlockDecomposition:
    blocks: list[Block]
    assignment: dict[Triangle, int] = field(default_factory=dict)

    def counts(self) -> dict[str, int]:
        out = {"crown": 0, "k4": 0, "invalid": 0}
        for b in self.blocks:
            out[b.kind.kind] += 1
        return out

    def edge_owner(self) -> dict[Edge, int]:
        return {e: b.id for b in self.blocks for e in b.edge_set}


class _DisjointSet:
    def __init__(self, size: int):
        self.parent = list(range(size))

    def find(self, x: int) -> int:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            if rb < ra:
                ra, rb = rb, ra
            self.parent[rb] = ra


def strip_nontriangle_edges(g: Graph) -> Graph:
    """Copy of g keeping only edges that lie in at least one triangle."""
    h = Graph(g.n)
    for u, v in g.edges():
        if g.mask(u) & g.mask(v):
            h.add_edge(u, v)
    return h


def is_stripped(g: Graph) -> bool:
    return all(g.mask(u) & g.mask(v) for u, v in g.edges())


def classify_block(triangles: list[Triangle], g: Graph) -> BlockKind:
    """Classify one block.

    K4 is tested before crown. A block that is neither carries a C5 witness,
    preferring one inside the block's own vertex set; if g has no C5 at all
    the crown/K4 dichotomy is broken and ContractViolation is raised.
    """
    tris = sorted(triangles)
    verts = sorted({v for t in tris for v in t})
    if len(tris) == 4 and len(verts) == 4:
        a, b, c, d = verts
        if all(g.has_edge(x, y) for i, x in enumerate(verts) for y in verts[i + 1:]):
            return K4Block((a, b, c, d))
    common = set(tris[0].edges())
    for t in tris[1:]:
        common &= set(t.edges())
    if common:
        base = min(common)
        apexes = tuple(sorted(v for t in tris for v in t if v not in base))
        return Crown(base, apexes)

    sub, old = g.induced(verts)
    local = find_c5(sub)
    if local is not None:
        witness = canonical_cycle(old[i] for i in local)
        return Invalid("neither crown nor K4", witness, True)
    witness = find_c5(g)
    if witness is None:
        raise ContractViolation(
            f"block {tris} is neither crown nor K4 but the graph is C5-free"
        )
    return Invalid("neither crown nor K4; C5 found outside the block", witness, False)


def decompose_blocks(g: Graph) -> BlockDecomposition:
    """Union triangles that share an edge; each class is a block, ordered by smallest triangle."""
    tris = enumerate_triangles(g)
    dsu = _DisjointSet(len(tris))
    first_on_edge: dict[Edge, int] = {}
    for i, t in enumerate(tris):
        for e in t.edges():
            j = first_on_edge.setdefault(e, i)
            if j != i:
                dsu.union(i, j)
    groups: dict[int, list[Triangle]] = {}
    for i, t in enumerate(tris):
        groups.setdefault(dsu.find(i), []).append(t)

    blocks = []
    assignment = {}
    for bid, root in enumerate(sorted(groups)):
        members = groups[root]
        edges = frozenset(e for t in members for e in t.edges())
        blocks.append(Block(bid, members, classify_block(members, g), edges))
        for t in members:
            assignment[t] = bid
    return BlockDecomposition(blocks, assignment)


def check_decomposition(g: Graph, dec: BlockDecomposition) -> dict[str, bool]:
    """Partition and edge-disjointness checks, recomputed from scratch."""
    tris = set(enumerate_triangles(g))
    listed = [t for b in dec.blocks for t in b.triangles]
    owner: dict[Edge, int] = {}
    disjoint = True
    for b in dec.blocks:
        for e in b.edge_set:
            if owner.setdefault(e, b.id) != b.id:
                disjoint = False
    shape = True
    for b in dec.blocks:
        k = len(b.triangles)
        if isinstance(b.kind, Crown):
            shape &= len(b.edge_set) == 2 * k + 1
        elif isinstance(b.kind, K4Block):
            shape &= k == 4 and len(b.edge_set) == 6
    return {
        "partition": len(listed) == len(tris) == len(set(listed)) and set(listed) == tris,
        "assignment": set(dec.assignment) == tris
        and all(t in dec.blocks[dec.assignment[t]].triangles for t in tris),
        "edge_disjoint": disjoint,
        "block_shapes": shape,
    }


def check_claim1(g: Graph) -> Verification:
    """Every block of a C5-free graph is a crown-block or a K4-block."""
    witness = find_c5(g)
    if witness is not None:
        return Verification("claim1", False, precondition_failed=True, witness=witness,
                            details={"reason": "precondition failed: graph contains a C5"})
    dec = decompose_blocks(g)
    checks = check_decomposition(g, dec)
    counts = dec.counts()
    checks["no_invalid_blocks"] = counts["invalid"] == 0
    return Verification("claim1", all(checks.values()), checks,
                        {"blocks": counts, "triangles": count_triangles(g)})


def check_claim2(g: Graph) -> Verification:
    """In a stripped C5-free graph, the four edges of every C4 lie in one block."""
    witness = find_c5(g)
    if witness is not None:
        return Verification("claim2", False, precondition_failed=True, witness=witness,
                            details={"reason": "precondition failed: graph contains a C5"})
    if not is_stripped(g):
        return Verification("claim2", False, precondition_failed=True,
                            details={"reason": "precondition failed: some edge lies in no triangle"})
    owner = decompose_blocks(g).edge_owner()
    total = 0
    violations = []
    for cyc in iter_c4(g):
        total += 1
        ids = {owner.get(tuple(sorted((cyc[i], cyc[(i + 1) % 4])))) for i in range(4)}
        if len(ids) != 1 or None in ids:
            violations.append(list(cyc))
    return Verification("claim2", not violations, {"single_block": not violations},
                        {"c4_count": total, "violations": violations[:10]})
