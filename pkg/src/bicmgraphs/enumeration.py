"""Exhaustive small-graph and small-tree enumeration up to isomorphism.

Graph classes on n vertices are grown from the classes on n-1 vertices by
attaching a new vertex with every possible neighbor mask and deduplicating
by canonical code; every isomorphism class is reached because deleting the
last vertex of any representative lands in some class one level down.
"""

from __future__ import annotations

import heapq
from functools import lru_cache

from .errors import SizeGuardError
from .graphs import Graph, Tree, canonical_labeling, is_connected, relabel

MAX_ENUM_VERTICES = 8


@lru_cache(maxsize=None)
def all_graph_classes(n: int) -> tuple[Graph, ...]:
    """Canonical representatives of all graphs on n vertices."""
    if n > MAX_ENUM_VERTICES:
        raise SizeGuardError(f"graph enumeration limited to {MAX_ENUM_VERTICES} vertices")
    if n == 0:
        return ()
    if n == 1:
        return (Graph(1, (0,)),)
    seen: dict[tuple[int, ...], Graph] = {}
    for base in all_graph_classes(n - 1):
        for mask in range(1 << (n - 1)):
            adj = [row | (((mask >> t) & 1) << (n - 1)) for t, row in enumerate(base.adj)]
            adj.append(mask)
            g = Graph(n, tuple(adj))
            code, perm = canonical_labeling(g)
            if code not in seen:
                seen[code] = relabel(g, perm)
    return tuple(sorted(seen.values(), key=lambda g: (g.edge_count(), g.adj)))


def connected_graph_classes(n: int) -> tuple[Graph, ...]:
    return tuple(g for g in all_graph_classes(n) if is_connected(g))


def _rooted_code(adj: dict[int, list[int]], v: int, parent: int):
    return tuple(sorted(_rooted_code(adj, w, v) for w in adj[v] if w != parent))


def _centroids(adj: dict[int, list[int]], m: int) -> list[int]:
    # repeatedly strip leaves; the last one or two vertices remain
    deg = {v: len(adj[v]) for v in adj}
    layer = [v for v in adj if deg[v] <= 1]
    removed = 0
    while m - removed > 2:
        removed += len(layer)
        nxt = []
        for v in layer:
            deg[v] = 0
            for w in adj[v]:
                if deg[w] > 1:
                    deg[w] -= 1
                    if deg[w] == 1:
                        nxt.append(w)
        layer = nxt
    return sorted(v for v in adj if deg[v] >= 1) or list(adj)[:1]


def _tree_code(edges: list[tuple[int, int]], m: int):
    if m == 1:
        return ((),)
    adj: dict[int, list[int]] = {v: [] for v in range(1, m + 1)}
    for a, b in edges:
        adj[a].append(b)
        adj[b].append(a)
    return min((_rooted_code(adj, c, 0),) for c in _centroids(adj, m))


def _tree_from_code(code) -> Tree:
    edges: list[tuple[int, int]] = []
    counter = [1]

    def build(sub, parent: int) -> None:
        me = counter[0]
        counter[0] += 1
        if parent:
            edges.append((parent, me))
        for child in sub:
            build(child, me)

    build(code[0], 0)
    m = counter[0] - 1
    if m == 1:
        return Tree(Graph(1, (0,)))
    return Tree.from_edges(m, edges)


@lru_cache(maxsize=None)
def tree_classes(m: int) -> tuple[Tree, ...]:
    """All trees on m vertices up to isomorphism (1, 1, 1, 2, 3, 6, 11, 23
    classes for m = 1..8), via Pruefer sequences and centroid-rooted codes."""
    if m > MAX_ENUM_VERTICES:
        raise SizeGuardError(f"tree enumeration limited to {MAX_ENUM_VERTICES} vertices")
    if m < 1:
        return ()
    if m == 1:
        return (Tree(Graph(1, (0,))),)
    if m == 2:
        return (Tree.from_edges(2, [(1, 2)]),)
    codes = {}
    for seq_id in range(m ** (m - 2)):
        seq = []
        k = seq_id
        for _ in range(m - 2):
            seq.append(k % m + 1)
            k //= m
        code = _tree_code(_prufer_decode(seq, m), m)
        if code not in codes:
            codes[code] = _tree_from_code(code)
    return tuple(codes[c] for c in sorted(codes))


def _prufer_decode(seq: list[int], m: int) -> list[tuple[int, int]]:
    degree = [1] * (m + 1)
    for v in seq:
        degree[v] += 1
    leaves = [v for v in range(1, m + 1) if degree[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for v in seq:
        leaf = heapq.heappop(leaves)
        edges.append((min(leaf, v), max(leaf, v)))
        degree[v] -= 1
        if degree[v] == 1:
            heapq.heappush(leaves, v)
    u, w = heapq.heappop(leaves), heapq.heappop(leaves)
    edges.append((min(u, w), max(u, w)))
    return edges
