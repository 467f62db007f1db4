"""Finite simple graphs on vertices 1..n stored as adjacency bit masks.

Vertices are 1-based in every public signature; bit k of a mask stands for
vertex k+1.  A ``VertexSet`` is just an int mask, with :func:`mask_of` /
:func:`vertices_of` converting to and from 1-based tuples.  All graph values
are immutable and hashable, so results of the heavier enumerations are cached.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import InputError, SizeGuardError

MAX_VERTICES = 64
MAX_ISO_VERTICES = 12

VertexSet = int


def mask_of(vertices) -> int:
    """Bit mask of an iterable of 1-based vertices."""
    m = 0
    for v in vertices:
        m |= 1 << (v - 1)
    return m


def vertices_of(mask: int) -> tuple[int, ...]:
    """Sorted 1-based vertices of a mask."""
    out = []
    while mask:
        b = mask & -mask
        out.append(b.bit_length())
        mask ^= b
    return tuple(out)


def iter_bits(mask: int):
    """Yield 0-based bit positions of a mask, ascending."""
    while mask:
        b = mask & -mask
        yield b.bit_length() - 1
        mask ^= b


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph: ``adj[i]`` is the neighbor mask of vertex i+1."""

    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if not 0 <= self.n <= MAX_VERTICES:
            raise SizeGuardError(f"vertex count {self.n} outside 0..{MAX_VERTICES}")
        if len(self.adj) != self.n:
            raise InputError("adjacency length does not match vertex count")
        full = (1 << self.n) - 1
        for i, row in enumerate(self.adj):
            if row & ~full:
                raise InputError(f"adjacency row {i + 1} mentions vertices beyond n")
            if row >> i & 1:
                raise InputError(f"loop at vertex {i + 1}")
            for j in iter_bits(row):
                if not self.adj[j] >> i & 1:
                    raise InputError(f"asymmetric adjacency between {i + 1} and {j + 1}")

    @staticmethod
    def from_edges(n: int, edges) -> "Graph":
        adj = [0] * n
        for e in edges:
            try:
                i, j = e
            except (TypeError, ValueError):
                raise InputError(f"edge {e!r} is not a pair") from None
            if not (1 <= i <= n and 1 <= j <= n):
                raise InputError(f"edge {{{i},{j}}} outside 1..{n}")
            if i == j:
                raise InputError(f"loop at vertex {i}")
            adj[i - 1] |= 1 << (j - 1)
            adj[j - 1] |= 1 << (i - 1)
        return Graph(n, tuple(adj))

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def edges(self) -> list[tuple[int, int]]:
        out = []
        for i in range(self.n):
            row = self.adj[i] >> (i + 1)
            for j in iter_bits(row << (i + 1)):
                out.append((i + 1, j + 1))
        return out

    def edge_count(self) -> int:
        return sum(r.bit_count() for r in self.adj) // 2

    def degree(self, i: int) -> int:
        self._check_vertex(i)
        return self.adj[i - 1].bit_count()

    def neighbors_mask(self, i: int) -> int:
        self._check_vertex(i)
        return self.adj[i - 1]

    def neighbors(self, i: int) -> tuple[int, ...]:
        return vertices_of(self.neighbors_mask(i))

    def has_edge(self, i: int, j: int) -> bool:
        self._check_vertex(i)
        self._check_vertex(j)
        return bool(self.adj[i - 1] >> (j - 1) & 1)

    def isolated_vertices(self) -> tuple[int, ...]:
        return tuple(i + 1 for i in range(self.n) if not self.adj[i])

    def _check_vertex(self, i: int) -> None:
        if not 1 <= i <= self.n:
            raise InputError(f"vertex {i} outside 1..{self.n}")

    def __repr__(self):
        return f"Graph(n={self.n}, edges={self.edges()})"


@dataclass(frozen=True)
class Tree:
    """A connected acyclic graph; construction validates tree-ness."""

    graph: Graph

    def __post_init__(self):
        g = self.graph
        if g.n < 1:
            raise InputError("a tree needs at least one vertex")
        if g.edge_count() != g.n - 1 or not is_connected(g):
            raise InputError("graph is not a tree (need connected and |E| = n - 1)")

    @staticmethod
    def from_edges(m: int, edges) -> "Tree":
        return Tree(Graph.from_edges(m, edges))

    @property
    def m(self) -> int:
        return self.graph.n

    def edges(self) -> list[tuple[int, int]]:
        return self.graph.edges()

    def __repr__(self):
        return f"Tree(m={self.m}, edges={self.edges()})"


def degree(g: Graph, i: int) -> int:
    return g.degree(i)


def connected_components(g: Graph) -> list[int]:
    """Component masks, ordered by their smallest vertex."""
    seen = 0
    comps = []
    for s in range(g.n):
        if seen >> s & 1:
            continue
        comp = 1 << s
        frontier = comp
        while frontier:
            nxt = 0
            for v in iter_bits(frontier):
                nxt |= g.adj[v]
            frontier = nxt & ~comp
            comp |= nxt
        comps.append(comp)
        seen |= comp
    return comps


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return False
    return len(connected_components(g)) == 1


def induced_subgraph(g: Graph, mask: int) -> tuple[Graph, tuple[int, ...]]:
    """Subgraph induced on a mask, with the tuple of original vertex names."""
    verts = vertices_of(mask)
    index = {v: t for t, v in enumerate(verts)}
    adj = [0] * len(verts)
    for t, v in enumerate(verts):
        for w in iter_bits(g.adj[v - 1] & mask):
            adj[t] |= 1 << index[w + 1]
    return Graph(len(verts), tuple(adj)), verts


def complement(g: Graph) -> Graph:
    full = g.full_mask
    adj = tuple((full & ~g.adj[i]) & ~(1 << i) for i in range(g.n))
    return Graph(g.n, adj)


def _bron_kerbosch(adj: tuple[int, ...], r: int, p: int, x: int, out: list[int]) -> None:
    if p == 0 and x == 0:
        out.append(r)
        return
    # pivot with most candidates knocked out
    pivot, best = -1, -1
    for u in iter_bits(p | x):
        k = (p & adj[u]).bit_count()
        if k > best:
            pivot, best = u, k
    for v in iter_bits(p & ~adj[pivot]):
        bit = 1 << v
        _bron_kerbosch(adj, r | bit, p & adj[v], x & adj[v], out)
        p &= ~bit
        x |= bit


def _canonical_sets(masks) -> list[int]:
    return sorted(set(masks), key=lambda m: (m.bit_count(), m))


def clique_complex_facets(g: Graph) -> list[int]:
    """All maximal cliques, sorted by (cardinality, mask)."""
    if g.n == 0:
        return []
    out: list[int] = []
    _bron_kerbosch(g.adj, 0, g.full_mask, 0, out)
    return _canonical_sets(out)


@lru_cache(maxsize=8192)
def maximal_independent_sets(g: Graph) -> tuple[int, ...]:
    """All maximal independent sets, sorted by (cardinality, mask)."""
    return tuple(clique_complex_facets(complement(g)))


def independence_number(g: Graph) -> int:
    return max(m.bit_count() for m in maximal_independent_sets(g))


def minimal_vertex_covers(g: Graph) -> list[int]:
    """Complements of the maximal independent sets, in canonical order."""
    full = g.full_mask
    return _canonical_sets(full ^ m for m in maximal_independent_sets(g))


def is_bipartite(g: Graph):
    """A bipartition (mask0, mask1) with each component colored from its
    smallest vertex, or None if the graph has an odd cycle."""
    color = [-1] * g.n
    for s in range(g.n):
        if color[s] >= 0:
            continue
        color[s] = 0
        stack = [s]
        while stack:
            v = stack.pop()
            for w in iter_bits(g.adj[v]):
                if color[w] < 0:
                    color[w] = 1 - color[v]
                    stack.append(w)
                elif color[w] == color[v]:
                    return None
    side0 = sum(1 << v for v in range(g.n) if color[v] == 0)
    return side0, g.full_mask ^ side0


def is_chordal(g: Graph):
    """A perfect elimination ordering (1-based tuple) or None.

    Maximum cardinality search; the reversed visit order is a PEO exactly
    when the graph is chordal, which the verification pass decides.
    """
    n = g.n
    if n == 0:
        return None
    weight = [0] * n
    numbered: list[int] = []
    in_order = [False] * n
    for _ in range(n):
        v = max((u for u in range(n) if not in_order[u]), key=lambda u: (weight[u], -u))
        in_order[v] = True
        numbered.append(v)
        for w in iter_bits(g.adj[v]):
            if not in_order[w]:
                weight[w] += 1
    order = numbered[::-1]  # candidate PEO
    pos = {v: k for k, v in enumerate(order)}
    for k, v in enumerate(order):
        later = [w for w in iter_bits(g.adj[v]) if pos[w] > k]
        if not later:
            continue
        u = min(later, key=lambda w: pos[w])
        rest = mask_of(w + 1 for w in later if w != u)
        if rest & ~g.adj[u]:
            return None
    return tuple(v + 1 for v in order)


def neighborhood_complement(g: Graph, i: int) -> tuple[Graph, tuple[int, ...]]:
    """The complement of the induced subgraph on N(i), with vertex names."""
    g._check_vertex(i)
    nb = g.adj[i - 1]
    if nb == 0:
        raise InputError(f"vertex {i} is isolated")
    sub, verts = induced_subgraph(g, nb)
    return complement(sub), verts


def canonical_labeling(g: Graph) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Canonical form of the graph.

    Returns ``(code, perm)`` where ``perm[t]`` is the 0-based original vertex
    placed at position t and ``code`` is the lexicographically maximal tuple of
    rows, row t being the adjacency bits of ``perm[t]`` against earlier
    positions.  The search branches only on exact row ties and collapses twin
    vertices, so symmetric graphs stay cheap.
    """
    n, adj = g.n, g.adj
    if n == 0:
        return (), ()
    best_code: list[int] | None = None
    best_perm: list[int] | None = None

    def extend(placed: list[int], placed_mask: int, rows: list[int]) -> None:
        nonlocal best_code, best_perm
        if len(placed) == n:
            if best_code is None or rows > best_code:
                best_code = rows[:]
                best_perm = placed[:]
            return
        best_row = -1
        tied: list[int] = []
        for v in range(n):
            if placed_mask >> v & 1:
                continue
            row = 0
            av = adj[v]
            for t, u in enumerate(placed):
                if av >> u & 1:
                    row |= 1 << t
            if row > best_row:
                best_row, tied = row, [v]
            elif row == best_row:
                tied.append(v)
        reps: list[int] = []
        for v in tied:
            if any(adj[v] & ~(1 << u) == adj[u] & ~(1 << v) for u in reps):
                continue  # twin of an explored branch
            reps.append(v)
        for v in reps:
            placed.append(v)
            rows.append(best_row)
            extend(placed, placed_mask | (1 << v), rows)
            placed.pop()
            rows.pop()

    extend([], 0, [])
    assert best_code is not None and best_perm is not None
    return tuple(best_code), tuple(best_perm)


def canonical_code(g: Graph) -> tuple[int, ...]:
    return canonical_labeling(g)[0]


def relabel(g: Graph, perm: tuple[int, ...]) -> Graph:
    """Relabeled copy where new vertex t+1 is the old vertex perm[t]+1."""
    inv = [0] * g.n
    for t, v in enumerate(perm):
        inv[v] = t
    adj = [0] * g.n
    for t, v in enumerate(perm):
        for w in iter_bits(g.adj[v]):
            adj[t] |= 1 << inv[w]
    return Graph(g.n, tuple(adj))


def canonical_graph(g: Graph) -> Graph:
    return relabel(g, canonical_labeling(g)[1])


def are_isomorphic(g: Graph, h: Graph):
    """A 1-based vertex bijection g -> h preserving edges, or None.

    Intended for small graphs; guarded at n <= 12.
    """
    if max(g.n, h.n) > MAX_ISO_VERTICES:
        raise SizeGuardError(f"isomorphism search limited to {MAX_ISO_VERTICES} vertices")
    if g.n != h.n or g.edge_count() != h.edge_count():
        return None
    if sorted(r.bit_count() for r in g.adj) != sorted(r.bit_count() for r in h.adj):
        return None
    code_g, perm_g = canonical_labeling(g)
    code_h, perm_h = canonical_labeling(h)
    if code_g != code_h:
        return None
    mapping = {perm_g[t] + 1: perm_h[t] + 1 for t in range(g.n)}
    for i, j in g.edges():
        assert h.has_edge(mapping[i], mapping[j])
    return mapping


# ---------------------------------------------------------------------------
# File formats


def graph_to_json_dict(g: Graph) -> dict:
    return {"n": g.n, "edges": [[i, j] for i, j in g.edges()]}


def graph_from_json_dict(obj) -> Graph:
    if not isinstance(obj, dict):
        raise InputError("graph JSON must be an object")
    if "n" not in obj or "edges" not in obj:
        raise InputError('graph JSON needs "n" and "edges" fields')
    n = obj["n"]
    if not isinstance(n, int):
        raise InputError('"n" must be an integer')
    edges = obj["edges"]
    if not isinstance(edges, list):
        raise InputError('"edges" must be a list of pairs')
    return Graph.from_edges(n, edges)


def parse_edge_list(text: str) -> Graph:
    """Parse "i j" lines (# comments allowed); n is the largest vertex seen."""
    edges = []
    n = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise InputError(f"line {lineno}: expected two vertex numbers, got {raw!r}")
        try:
            i, j = int(parts[0]), int(parts[1])
        except ValueError:
            raise InputError(f"line {lineno}: non-integer vertex in {raw!r}") from None
        if i < 1 or j < 1:
            raise InputError(f"line {lineno}: vertices must be >= 1")
        edges.append((i, j))
        n = max(n, i, j)
    if not edges:
        raise InputError("edge list is empty")
    return Graph.from_edges(n, edges)


def to_dot(g: Graph, name: str = "G") -> str:
    lines = [f"graph {name} {{"]
    for i in range(1, g.n + 1):
        lines.append(f"  {i};")
    for i, j in g.edges():
        lines.append(f"  {i} -- {j};")
    lines.append("}")
    return "\n".join(lines) + "\n"
