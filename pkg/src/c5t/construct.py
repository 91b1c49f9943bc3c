"""Graph generators: projective-plane incidence graphs, the doubling construction,
named fixtures and seeded random C5-free graphs."""
from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import product

from .detect import cycle_edges, find_c5
from .graph import Graph, GraphError


@dataclass
class BipartiteGraph:
    graph: Graph
    side_a: list[int]
    side_b: list[int]

    def is_proper(self) -> bool:
        a = set(self.side_a)
        b = set(self.side_b)
        if a & b or a | b != set(range(self.graph.n)):
            return False
        return all((u in a) != (v in a) for u, v in self.graph.edges())


def is_prime(q: int) -> bool:
    if q < 2:
        return False
    d = 2
    while d * d <= q:
        if q % d == 0:
            return False
        d += 1
    return True


def projective_points(q: int) -> list[tuple[int, int, int]]:
    """Nonzero vectors of (Z/q)^3 normalised so the first nonzero entry is 1."""
    pts = []
    for v in product(range(q), repeat=3):
        lead = next((x for x in v if x), 0)
        if lead == 1:
            pts.append(v)
    return pts


def projective_plane_incidence(q: int) -> BipartiteGraph:
    """Point-line incidence graph of PG(2, q), q prime.

    Points are vertices 0..N-1, lines N..2N-1, N = q^2 + q + 1; a point lies on
    a line when their coordinate vectors are orthogonal mod q.
    """
    if not is_prime(q):
        raise GraphError(f"q must be prime, got {q}")
    pts = projective_points(q)
    size = len(pts)
    g = Graph(2 * size)
    for i, p in enumerate(pts):
        for j, line in enumerate(pts):
            if (p[0] * line[0] + p[1] * line[1] + p[2] * line[2]) % q == 0:
                g.add_edge(i, size + j)
    return BipartiteGraph(g, list(range(size)), list(range(size, 2 * size)))


def bg_double(g0: BipartiteGraph, side: str = "B") -> Graph:
    """Copy each vertex b of one colour class to b', join b-b' and a-b' for every edge a-b.

    Original vertex ids are kept; copies are appended in the order of the
    doubled side. Each original edge becomes the triangle {a, b, b'}.
    """
    if not g0.is_proper():
        raise GraphError("input is not a properly 2-coloured bipartite graph")
    if side not in ("A", "B"):
        raise GraphError(f"side must be 'A' or 'B', got {side!r}")
    doubled = g0.side_b if side == "B" else g0.side_a
    base = g0.graph
    copy_of = {b: base.n + i for i, b in enumerate(doubled)}
    g = Graph(base.n + len(doubled))
    for u, v in base.edges():
        g.add_edge(u, v)
    for b, b2 in copy_of.items():
        g.add_edge(b, b2)
        for a in base.neighbors(b):
            g.add_edge(a, b2)
    return g


def bg_projective(q: int, side: str = "B") -> Graph:
    return bg_double(projective_plane_incidence(q), side)


NAMED_MINIMUM = {"complete": 1, "cycle": 3, "book": 1, "friendship": 1, "path": 1, "empty": 0}


def named_graph(name: str, k: int) -> Graph:
    """complete k, cycle k, book k (edge 01 plus apexes 2..k+1),
    friendship k (k triangles on centre 0), path k (k vertices), empty k."""
    if name not in NAMED_MINIMUM:
        raise GraphError(f"unknown graph name {name!r}; expected one of {sorted(NAMED_MINIMUM)}")
    if k < NAMED_MINIMUM[name]:
        raise GraphError(f"{name} needs size >= {NAMED_MINIMUM[name]}, got {k}")
    if name == "complete":
        g = Graph(k)
        for u in range(k):
            for v in range(u + 1, k):
                g.add_edge(u, v)
    elif name == "cycle":
        g = Graph(k)
        for i in range(k):
            g.add_edge(i, (i + 1) % k)
    elif name == "path":
        g = Graph(k)
        for i in range(k - 1):
            g.add_edge(i, i + 1)
    elif name == "book":
        g = Graph(k + 2)
        g.add_edge(0, 1)
        for c in range(2, k + 2):
            g.add_edge(0, c)
            g.add_edge(1, c)
    elif name == "friendship":
        g = Graph(2 * k + 1)
        for i in range(k):
            x, y = 2 * i + 1, 2 * i + 2
            g.add_edge(0, x)
            g.add_edge(0, y)
            g.add_edge(x, y)
    else:
        g = Graph(k)
    return g


def parse_named(spec: str) -> Graph:
    """'book-3', 'book 3' or 'book3' -> named_graph('book', 3)."""
    s = spec.strip().lower().replace("-", " ").replace("_", " ")
    head = s.rstrip("0123456789").strip()
    tail = s[len(s.rstrip("0123456789")):]
    if not tail:
        raise GraphError(f"missing size in graph name {spec!r}")
    return named_graph(head, int(tail))


def _gnp(n: int, p: float, rng: random.Random) -> Graph:
    if not 0.0 <= p <= 1.0:
        raise GraphError(f"edge probability must lie in [0, 1], got {p}")
    g = Graph(n)
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                g.add_edge(u, v)
    return g


def random_graph(n: int, p: float, seed: int) -> Graph:
    return _gnp(n, p, random.Random(seed))


def random_c5_free(n: int, p: float, seed: int) -> Graph:
    """G(n, p) from a seeded stream, then delete a random edge of each C5 found until none remain."""
    rng = random.Random(seed)
    g = _gnp(n, p, rng)
    while (w := find_c5(g)) is not None:
        g.remove_edge(*cycle_edges(w)[rng.randrange(5)])
    return g
