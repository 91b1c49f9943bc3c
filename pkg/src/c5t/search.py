"""Exact ex(n, K3, C5) for small n by include/exclude depth-first search over edges.

Edges are decided in lexicographic order. An include branch is cut when the
edge would close a C5 (a path of length 4 between its ends); any branch is cut
when the triangles still achievable, i.e. the triangle count of the graph of
included plus undecided edges, cannot beat the incumbent.
"""
from __future__ import annotations

import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations
from typing import Optional

from .graph import Graph, from_edge_list

DEFAULT_CAP = 8
PREFIX_DEPTH = 6


class SearchCapError(ValueError):
    pass


@dataclass
class SearchRecord:
    n: int
    max_triangles: int
    witness: list[tuple[int, int]]
    nodes_explored: int = 0
    elapsed: float = 0.0
    options: dict = field(default_factory=dict)

    def graph(self) -> Graph:
        return from_edge_list(self.n, self.witness)

    def result_dict(self) -> dict:
        """Fields that depend only on the inputs."""
        return {
            "n": self.n,
            "max_triangles": self.max_triangles,
            "witness": [list(e) for e in self.witness],
            "options": dict(self.options),
        }

    def run_dict(self) -> dict:
        return {"nodes_explored": self.nodes_explored, "elapsed": round(self.elapsed, 6)}


def _path4(adj, x, y):
    outer = ~((1 << x) | (1 << y))
    for p in _bits(adj[y] & outer):
        pr = outer & ~(1 << p)
        for r in _bits(adj[x] & pr):
            if adj[p] & adj[r] & outer:
                return True
    return False


def _bits(mask):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class _State:
    """Mutable search state; single owner."""

    def __init__(self, n: int, use_bound: bool, symmetry: bool, shared=None):
        self.n = n
        self.edges = list(combinations(range(n), 2))
        self.row_end = {}
        for i, (u, _) in enumerate(self.edges):
            self.row_end[u] = i
        self.adj = [0] * n
        self.poss = [((1 << n) - 1) & ~(1 << v) for v in range(n)]
        self.t = 0
        self.tp = n * (n - 1) * (n - 2) // 6
        self.use_bound = use_bound
        self.symmetry = symmetry
        self.best = -1
        self.best_edges: list[tuple[int, int]] = []
        self.nodes = 0
        self.shared = shared

    def include(self, u, v):
        self.t += (self.adj[u] & self.adj[v]).bit_count()
        self.adj[u] |= 1 << v
        self.adj[v] |= 1 << u

    def uninclude(self, u, v):
        self.adj[u] &= ~(1 << v)
        self.adj[v] &= ~(1 << u)
        self.t -= (self.adj[u] & self.adj[v]).bit_count()

    def exclude(self, u, v):
        self.poss[u] &= ~(1 << v)
        self.poss[v] &= ~(1 << u)
        lost = (self.poss[u] & self.poss[v]).bit_count()
        self.tp -= lost
        return lost

    def unexclude(self, u, v, lost):
        self.poss[u] |= 1 << v
        self.poss[v] |= 1 << u
        self.tp += lost

    def degree_order_ok(self, i: int) -> bool:
        """With edge i the last of row u decided: deg(u) <= deg(u-1) and no later vertex already exceeds deg(u)."""
        u = self.edges[i][0]
        if self.row_end[u] != i:
            return True
        adj = self.adj
        d = adj[u].bit_count()
        if u > 0 and d > adj[u - 1].bit_count():
            return False
        return all(adj[w].bit_count() <= d for w in range(u + 1, self.n))

    def can_improve(self) -> bool:
        if not self.use_bound:
            return True
        if self.tp <= self.best:
            return False
        shared = self.shared
        return shared is None or self.tp >= shared.value

    def record(self):
        self.best = self.t
        self.best_edges = [(u, v) for u, v in self.edges if self.adj[u] >> v & 1]
        shared = self.shared
        if shared is not None and self.t > shared.value:
            with shared.get_lock():
                if self.t > shared.value:
                    shared.value = self.t

    def dfs(self, i: int):
        self.nodes += 1
        if not self.can_improve():
            return
        if i == len(self.edges) or (self.use_bound and self.tp == self.t):
            # nothing left to gain below this node
            if self.t > self.best:
                self.record()
            return
        u, v = self.edges[i]
        if not _path4(self.adj, u, v):
            self.include(u, v)
            if not self.symmetry or self.degree_order_ok(i):
                self.dfs(i + 1)
            self.uninclude(u, v)
        lost = self.exclude(u, v)
        if not self.symmetry or self.degree_order_ok(i):
            self.dfs(i + 1)
        self.unexclude(u, v, lost)

    def prefixes(self, depth: int):
        """Feasible decision prefixes of the first ``depth`` edges, in DFS order."""
        out = []

        def walk(i, taken):
            if i == depth:
                out.append(tuple(taken))
                return
            u, v = self.edges[i]
            if not _path4(self.adj, u, v):
                self.include(u, v)
                if not self.symmetry or self.degree_order_ok(i):
                    walk(i + 1, taken + [True])
                self.uninclude(u, v)
            lost = self.exclude(u, v)
            if not self.symmetry or self.degree_order_ok(i):
                walk(i + 1, taken + [False])
            self.unexclude(u, v, lost)

        walk(0, [])
        return out

    def apply(self, prefix):
        for (u, v), take in zip(self.edges, prefix):
            if take:
                self.include(u, v)
            else:
                self.exclude(u, v)


_SHARED = None


def _init_worker(shared):
    global _SHARED
    _SHARED = shared


def _run_task(args):
    n, prefix, use_bound, symmetry = args
    st = _State(n, use_bound, symmetry, _SHARED)
    st.apply(prefix)
    st.dfs(len(prefix))
    return st.best, st.best_edges, st.nodes


def default_workers() -> int:
    raw = os.environ.get("C5T_THREADS")
    if raw:
        try:
            return max(1, int(raw))
        except ValueError:
            pass
    return 1


def exact_ex(n: int, cap: int = DEFAULT_CAP, workers: Optional[int] = None,
             symmetry: bool = False, use_bound: bool = True) -> SearchRecord:
    """Maximum triangle count over C5-free graphs on n labelled vertices, with a witness.

    ``workers > 1`` splits the tree at a fixed prefix depth into process-pool
    tasks sharing a monotone incumbent; value and witness equal the
    single-process result, ``nodes_explored`` may differ.
    """
    if n < 0:
        raise ValueError(f"order must be non-negative, got {n}")
    if n > cap:
        raise SearchCapError(
            f"n={n} exceeds the search cap {cap}; pass a larger cap (--cap {n}) to run it anyway"
        )
    workers = default_workers() if workers is None else max(1, workers)
    options = {"symmetry": symmetry, "bound": use_bound}
    start = time.perf_counter()
    st = _State(n, use_bound, symmetry)
    depth = min(PREFIX_DEPTH, len(st.edges))
    if workers == 1 or depth == 0:
        st.dfs(0)
        best, edges, nodes = st.best, st.best_edges, st.nodes
    else:
        import multiprocessing as mp

        shared = mp.Value("i", -1)
        tasks = [(n, p, use_bound, symmetry) for p in st.prefixes(depth)]
        with ProcessPoolExecutor(workers, initializer=_init_worker, initargs=(shared,)) as pool:
            results = list(pool.map(_run_task, tasks))
        best, edges, nodes = -1, [], 0
        for b, e, k in results:
            nodes += k
            if b > best:
                best, edges = b, e
    return SearchRecord(n, max(best, 0), edges, nodes, time.perf_counter() - start, options)


def search_table(n_min: int, n_max: int, cap: int = DEFAULT_CAP, **opts) -> list[SearchRecord]:
    if n_max > cap:
        raise SearchCapError(
            f"n_max={n_max} exceeds the search cap {cap}; pass a larger cap to run it anyway"
        )
    return [exact_ex(n, cap=cap, **opts) for n in range(n_min, n_max + 1)]
