"""Simple undirected graphs on dense 0-based vertex ids.

Adjacency is kept as one integer bitmask per vertex so the detectors and the
extremal search can intersect neighbourhoods with a single ``&``.
"""
from __future__ import annotations

from typing import Iterable, Iterator, NamedTuple

Edge = tuple[int, int]


class GraphError(ValueError):
    """Invalid vertex or edge passed to a graph builder."""


class Triangle(NamedTuple):
    a: int
    b: int
    c: int

    @classmethod
    def of(cls, x: int, y: int, z: int) -> "Triangle":
        a, b, c = sorted((x, y, z))
        return cls(a, b, c)

    def edges(self) -> tuple[Edge, Edge, Edge]:
        return (self.a, self.b), (self.a, self.c), (self.b, self.c)


def edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


def bits(mask: int) -> Iterator[int]:
    """Yield set bit positions of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Graph:
    """Simple undirected graph with vertices ``0..n-1``.

    Analysis code treats a Graph as a value; only builders (constructors,
    the search) call the mutating methods.
    """

    __slots__ = ("n", "_adj", "_m")

    def __init__(self, n: int = 0):
        if n < 0:
            raise GraphError(f"order must be non-negative, got {n}")
        self.n = n
        self._adj = [0] * n
        self._m = 0

    def _check(self, u: int, v: int) -> None:
        for x in (u, v):
            if not 0 <= x < self.n:
                raise GraphError(f"vertex {x} out of range for order {self.n}")
        if u == v:
            raise GraphError(f"loop at vertex {u}")

    def add_edge(self, u: int, v: int) -> bool:
        """Insert edge uv; returns False if it was already present."""
        self._check(u, v)
        if self._adj[u] >> v & 1:
            return False
        self._adj[u] |= 1 << v
        self._adj[v] |= 1 << u
        self._m += 1
        return True

    def remove_edge(self, u: int, v: int) -> None:
        self._check(u, v)
        if not self._adj[u] >> v & 1:
            raise GraphError(f"edge ({u}, {v}) not present")
        self._adj[u] &= ~(1 << v)
        self._adj[v] &= ~(1 << u)
        self._m -= 1

    def has_edge(self, u: int, v: int) -> bool:
        return u != v and bool(self._adj[u] >> v & 1)

    @property
    def m(self) -> int:
        return self._m

    def mask(self, v: int) -> int:
        return self._adj[v]

    def masks(self) -> list[int]:
        return list(self._adj)

    def neighbors(self, v: int) -> list[int]:
        return list(bits(self._adj[v]))

    def degree(self, v: int) -> int:
        return self._adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [self.degree(v) for v in range(self.n)]

    def edges(self) -> list[Edge]:
        """All edges as ``(u, v)`` with ``u < v``, in lexicographic order."""
        out = []
        for u in range(self.n):
            for v in bits(self._adj[u] >> (u + 1)):
                out.append((u, u + 1 + v))
        return out

    def copy(self) -> "Graph":
        g = Graph(self.n)
        g._adj = list(self._adj)
        g._m = self._m
        return g

    def with_edge(self, u: int, v: int) -> "Graph":
        g = self.copy()
        g.add_edge(u, v)
        return g

    def subgraph_of(self, other: "Graph") -> bool:
        """True if every edge of self is an edge of ``other`` (same order)."""
        return self.n == other.n and all(
            a & ~b == 0 for a, b in zip(self._adj, other._adj)
        )

    def induced(self, vertices: Iterable[int]) -> tuple["Graph", list[int]]:
        """Induced subgraph, relabelled densely; returns it with the old ids."""
        old = sorted(set(vertices))
        new_of = {v: i for i, v in enumerate(old)}
        h = Graph(len(old))
        for u in old:
            for v in bits(self._adj[u]):
                if u < v and v in new_of:
                    h.add_edge(new_of[u], new_of[v])
        return h, old

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self._adj == other._adj

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self._m})"


def new_graph(n: int) -> Graph:
    return Graph(n)


def add_edge(g: Graph, u: int, v: int) -> Graph:
    g.add_edge(u, v)
    return g


def from_edge_list(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph from pairs; duplicates collapse, errors cite the 1-based pair index."""
    g = Graph(n)
    for lineno, pair in enumerate(edges, start=1):
        try:
            u, v = pair
            g.add_edge(int(u), int(v))
        except GraphError as exc:
            raise GraphError(f"edge {lineno}: {exc}") from None
    return g


def to_edge_list(g: Graph) -> list[Edge]:
    return g.edges()
