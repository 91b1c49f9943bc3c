"""Brute-force reference computations, independent of the c5t package."""
from __future__ import annotations

from itertools import combinations, permutations

import numpy as np


def all_pairs(n):
    return list(combinations(range(n), 2))


def cycles_as_edge_sets(n, length):
    """Every cycle of the given length in K_n, as a frozenset of edges."""
    seen = set()
    for verts in permutations(range(n), length):
        if verts[0] != min(verts) or verts[1] > verts[-1]:
            continue
        es = frozenset(
            tuple(sorted((verts[i], verts[(i + 1) % length]))) for i in range(length)
        )
        seen.add(es)
    return sorted(seen, key=sorted)


def has_cycle_bruteforce(edges, n, length):
    """Check every ordered tuple of distinct vertices for a closed walk."""
    es = {tuple(sorted(e)) for e in edges}
    for verts in permutations(range(n), length):
        if all(
            tuple(sorted((verts[i], verts[(i + 1) % length]))) in es
            for i in range(length)
        ):
            return True
    return False


def count_triangles_bruteforce(edges, n):
    es = {tuple(sorted(e)) for e in edges}
    return sum(
        1
        for a, b, c in combinations(range(n), 3)
        if (a, b) in es and (a, c) in es and (b, c) in es
    )


def ex_k3_c5_bruteforce(n):
    """Max triangles over all 2^C(n,2) labeled graphs with no C5.

    Returns (value, edge list of the first maximizer in mask order).
    """
    pairs = all_pairs(n)
    index = {p: i for i, p in enumerate(pairs)}
    if not pairs:
        return 0, []
    masks = np.arange(1 << len(pairs), dtype=np.int64)

    def to_mask(es):
        return sum(1 << index[e] for e in es)

    ok = np.ones(masks.shape, dtype=bool)
    for cyc in cycles_as_edge_sets(n, 5):
        cm = to_mask(cyc)
        ok &= (masks & cm) != cm
    tri = np.zeros(masks.shape, dtype=np.int64)
    for a, b, c in combinations(range(n), 3):
        tm = to_mask([(a, b), (a, c), (b, c)])
        tri += (masks & tm) == tm
    tri[~ok] = -1
    best = int(np.argmax(tri))
    return int(tri[best]), [p for i, p in enumerate(pairs) if best >> i & 1]


def girth_bruteforce(edges, n):
    for length in range(3, n + 1):
        if has_cycle_bruteforce(edges, n, length):
            return length
    return None
