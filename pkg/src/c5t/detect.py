"""Triangle enumeration, short-cycle detection with witnesses, girth."""
from __future__ import annotations

from collections import deque
from typing import Iterator, Optional

from .graph import Graph, Triangle, bits

CycleWitness = tuple[int, ...]


def canonical_cycle(vertices) -> CycleWitness:
    """Rotate to start at the smallest vertex, oriented towards its smaller neighbour."""
    vs = list(vertices)
    i = vs.index(min(vs))
    vs = vs[i:] + vs[:i]
    if len(vs) > 2 and vs[1] > vs[-1]:
        vs = [vs[0]] + vs[:0:-1]
    return tuple(vs)


def cycle_edges(cycle: CycleWitness) -> list[tuple[int, int]]:
    k = len(cycle)
    return [tuple(sorted((cycle[i], cycle[(i + 1) % k]))) for i in range(k)]


def is_cycle_in(g: Graph, cycle: CycleWitness) -> bool:
    return len(set(cycle)) == len(cycle) >= 3 and all(
        g.has_edge(u, v) for u, v in cycle_edges(cycle)
    )


def enumerate_triangles(g: Graph) -> list[Triangle]:
    adj = g.masks()
    out = []
    for a in range(g.n):
        for b in bits(adj[a] >> (a + 1)):
            b += a + 1
            for c in bits((adj[a] & adj[b]) >> (b + 1)):
                out.append(Triangle(a, b, b + 1 + c))
    return out


def count_triangles(g: Graph) -> int:
    adj = g.masks()
    total = 0
    for u, v in g.edges():
        total += (adj[u] & adj[v]).bit_count()
    return total // 3


def _path4(adj: list[int], x: int, y: int) -> Optional[tuple[int, int, int]]:
    """First (p, q, r) in ascending order with y-p-q-r-x a path on 5 distinct vertices."""
    outer = ~((1 << x) | (1 << y))
    for p in bits(adj[y] & outer):
        for r in bits(adj[x] & outer & ~(1 << p)):
            common = adj[p] & adj[r] & outer
            if common:
                return p, (common & -common).bit_length() - 1, r
    return None


def find_c5(g: Graph) -> Optional[CycleWitness]:
    adj = g.masks()
    for x, y in g.edges():
        if adj[x].bit_count() < 2 or adj[y].bit_count() < 2:
            continue
        hit = _path4(adj, x, y)
        if hit:
            p, q, r = hit
            return canonical_cycle((x, y, p, q, r))
    return None


def creates_c5(g: Graph, u: int, v: int) -> bool:
    """Would adding the absent edge uv create a C5 (a u-v path of length 4)?"""
    return _path4(g.masks(), u, v) is not None


def iter_c4(g: Graph) -> Iterator[CycleWitness]:
    """Every 4-cycle exactly once, canonical form, in ascending order of the diagonal pair."""
    adj = g.masks()
    seen = set()
    for u in range(g.n):
        reach = 0
        for x in bits(adj[u]):
            reach |= adj[x]
        for w in bits(reach >> (u + 1)):
            w += u + 1
            common = list(bits(adj[u] & adj[w]))
            for i, a in enumerate(common):
                for b in common[i + 1:]:
                    c = canonical_cycle((u, a, w, b))
                    if c not in seen:
                        seen.add(c)
                        yield c


def find_c4(g: Graph) -> Optional[CycleWitness]:
    return next(iter_c4(g), None)


def girth(g: Graph) -> Optional[int]:
    """Length of a shortest cycle, by BFS from every vertex; None for forests."""
    best = None
    for root in range(g.n):
        dist = {root: 0}
        parent = {root: -1}
        queue = deque([root])
        while queue:
            u = queue.popleft()
            if best is not None and 2 * dist[u] >= best:
                break
            for w in g.neighbors(u):
                if w not in dist:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif parent[u] != w:
                    length = dist[u] + dist[w] + 1
                    if best is None or length < best:
                        best = length
        if best == 3:
            break
    return best
