"""Separation of edge ideals, relation trees, and inseparable models.

Splitting a vertex i into i and a new vertex i' is a separation when
re-identifying the two is a non-zerodivisor quotient; combinatorially the
binomial is a non-zerodivisor exactly when no minimal vertex cover of the
split graph contains both i and i'.  A graph admits no separation at all
if and only if every neighborhood-complement G^(i) is connected, which is
the cheap test used everywhere.

For a bi-CM graph the dual of the edge ideal is codimension-2 Cohen-Macaulay
with linear resolution, and every valid relation matrix is supported on a
spanning tree of the linear syzygy graph of the dual generators.  Feeding
such a tree into the generic construction and specializing the pair
variables back to the matrix entries produces an inseparable model; the
construction below verifies the specialization instead of assuming it.
"""

from __future__ import annotations

from dataclasses import dataclass

from .bicm import certify_bicm
from .errors import ConsistencyError, InputError
from .generic import (RelationMatrix, generic_graph, generic_graph_edge_ideal,
                      generic_ideal, pair_name, pair_universe,
                      poly_is_signed_monomial)
from .graphs import (Graph, Tree, is_connected, iter_bits,
                     minimal_vertex_covers, neighborhood_complement,
                     vertices_of)
from .ideals import SquarefreeIdeal, alexander_dual, edge_ideal, substitute
from .resolutions import FieldSpec


@dataclass(frozen=True)
class SeparationCandidate:
    """A proposed split of ``vertex``; the new vertex is ``base.n + 1``."""

    base: Graph
    vertex: int
    separated: Graph

    @property
    def new_vertex(self) -> int:
        return self.base.n + 1

    @property
    def mapping(self) -> dict[int, int]:
        return {self.new_vertex: self.vertex}


@dataclass(frozen=True)
class LinearSyzygyGraph:
    """Nodes index the generators; an edge (a, b, var_a, var_b) witnesses
    var_a * u_a = var_b * u_b in one degree above the generators."""

    m: int
    edges: tuple[tuple[int, int, str, str], ...]


@dataclass(frozen=True)
class InseparableModel:
    tree: Tree
    graph: Graph
    vertex_pairs: tuple[tuple[int, int], ...]
    substitution: dict[str, str]
    matrix: RelationMatrix


def is_inseparable(g: Graph) -> bool:
    """Every neighborhood complement connected (single vertices count)."""
    if g.isolated_vertices():
        raise InputError(f"graph has isolated vertices {list(g.isolated_vertices())}")
    for i in range(1, g.n + 1):
        h, _ = neighborhood_complement(g, i)
        if h.n >= 2 and not is_connected(h):
            return False
    return True


def first_separability_witness(g: Graph):
    """The first vertex whose neighborhood complement is disconnected,
    with that complement's components in original vertex names."""
    for i in range(1, g.n + 1):
        h, names = neighborhood_complement(g, i)
        if h.n >= 2 and not is_connected(h):
            from .graphs import connected_components
            comps = [[names[t] for t in iter_bits(mask)] for mask in connected_components(h)]
            return i, comps
    return None


def separation_candidates(g: Graph, i: int) -> list[SeparationCandidate]:
    """All unordered proper splits of the edges at i between i and the new
    vertex; the side containing the smallest neighbor stays at i."""
    g._check_vertex(i)
    nb = list(iter_bits(g.adj[i - 1]))
    if len(nb) < 2:
        return []
    movable = nb[1:]  # the smallest neighbor always stays at i
    out = []
    for pick in range(1, 1 << len(movable)):
        moved = [movable[t] for t in range(len(movable)) if pick >> t & 1]
        adj = list(g.adj) + [0]
        new = g.n  # 0-based index of the new vertex
        for w in moved:
            adj[i - 1] &= ~(1 << w)
            adj[w] &= ~(1 << (i - 1))
            adj[w] |= 1 << new
            adj[new] |= 1 << w
        out.append(SeparationCandidate(g, i, Graph(g.n + 1, tuple(adj))))
    return out


def validate_separation(c: SeparationCandidate) -> bool:
    """Check the three separation conditions combinatorially."""
    g, i, h = c.base, c.vertex, c.separated
    if h.n != g.n + 1 or not 1 <= i <= g.n:
        raise InputError("candidate shape is wrong: need one extra vertex and a valid split vertex")
    new = c.new_vertex
    if h.has_edge(i, new):
        return False  # identification would square a generator
    # (i) identifying the new vertex with i must give back exactly the base edges
    merged = set()
    for a, b in h.edges():
        a = i if a == new else a
        b = i if b == new else b
        merged.add((min(a, b), max(a, b)))
    if merged != {(min(a, b), max(a, b)) for a, b in g.edges()}:
        return False
    # (ii) both halves must still touch some generator
    if h.degree(i) == 0 or h.degree(new) == 0:
        return False
    # (iii) the identification binomial is a non-zerodivisor iff no minimal
    # cover of the split graph contains both vertices
    both = (1 << (i - 1)) | (1 << (new - 1))
    return all(cover & both != both for cover in minimal_vertex_covers(h))


def is_separable_brute_force(g: Graph) -> bool:
    """Existence of a validating candidate over all vertices and splits."""
    for i in range(1, g.n + 1):
        for cand in separation_candidates(g, i):
            if validate_separation(cand):
                return True
    return False


def linear_syzygy_graph(ideal: SquarefreeIdeal) -> LinearSyzygyGraph:
    """Pairs of generators one degree apart from their least common multiple."""
    degs = set(ideal.degrees())
    if len(degs) != 1:
        raise InputError("linear syzygy graph needs generators in one degree")
    d = degs.pop()
    gens = ideal.gens
    edges = []
    for a in range(len(gens)):
        for b in range(a + 1, len(gens)):
            union = gens[a] | gens[b]
            if union.bit_count() == d + 1:
                var_a = ideal.universe[(gens[b] & ~gens[a]).bit_length() - 1]
                var_b = ideal.universe[(gens[a] & ~gens[b]).bit_length() - 1]
                edges.append((a + 1, b + 1, var_a, var_b))
    return LinearSyzygyGraph(len(gens), tuple(edges))


def _spanning_trees(m: int, edges: list[tuple[int, int]]):
    """All spanning trees as tuples of edge indices, in lexicographic order."""
    out: list[tuple[int, ...]] = []

    def find(parent: list[int], v: int) -> int:
        while parent[v] != v:
            v = parent[v]
        return v

    def rec(idx: int, chosen: tuple[int, ...], parent: list[int]) -> None:
        if len(chosen) == m - 1:
            out.append(chosen)
            return
        if len(edges) - idx < m - 1 - len(chosen):
            return
        a, b = edges[idx]
        ra, rb = find(parent, a), find(parent, b)
        if ra != rb:
            nxt = parent[:]
            nxt[ra] = rb
            rec(idx + 1, chosen + (idx,), nxt)
        rec(idx + 1, chosen, parent)

    rec(0, (), list(range(m + 1)))
    return out


def relation_trees(ideal: SquarefreeIdeal) -> list[tuple[Tree, RelationMatrix]]:
    """Every spanning tree of the syzygy graph whose binomial rows actually
    present the ideal, i.e. whose maximal minors reproduce the generators up
    to sign.  The caller is expected to pass a codimension-2 Cohen-Macaulay
    ideal with linear resolution; an empty result signals that assumption
    failed."""
    m = len(ideal.gens)
    if m < 2:
        raise InputError("relation trees need at least two generators")
    syz = linear_syzygy_graph(ideal)
    edge_pairs = [(a, b) for a, b, _, _ in syz.edges]
    witness = {(a, b): (va, vb) for a, b, va, vb in syz.edges}
    out = []
    for chosen in _spanning_trees(m, edge_pairs):
        rows = []
        for idx in chosen:
            a, b = edge_pairs[idx]
            va, vb = witness[(a, b)]
            rows.append((a, va, b, vb))
        mat = RelationMatrix(m, tuple(rows))
        minors = mat.maximal_minors()
        ok = True
        for j, poly in enumerate(minors):
            mono = tuple(sorted(ideal.universe[k] for k in iter_bits(ideal.gens[j])))
            if not poly_is_signed_monomial(poly, mono):
                ok = False
                break
        if ok:
            out.append((Tree.from_edges(m, [edge_pairs[t] for t in chosen]), mat))
    return out


def model_for_tree(g: Graph, tree: Tree, matrix: RelationMatrix) -> InseparableModel:
    """Build and verify the generic model attached to one relation tree."""
    ideal = edge_ideal(g)
    model_graph, pairs = generic_graph(tree)
    sub: dict[str, str] = {}
    for col_a, var_a, col_b, var_b in matrix.rows:
        sub[pair_name(col_a, col_b)] = var_a
        sub[pair_name(col_b, col_a)] = var_b
    image = substitute(generic_graph_edge_ideal(tree), sub, universe=ideal.universe)
    if image != ideal:
        raise ConsistencyError(
            "specializing the generic graph did not reproduce the edge ideal")
    return InseparableModel(tree, model_graph, pairs, sub, matrix)


def inseparable_model(g: Graph) -> InseparableModel:
    """An inseparable graph specializing onto g, built from the
    lexicographically smallest valid relation tree of the dual."""
    if not certify_bicm(g, FieldSpec(0)).verdict:
        raise InputError("inseparable models are built for bi-CM graphs only")
    dual = alexander_dual(edge_ideal(g))
    trees = relation_trees(dual)
    if not trees:
        raise ConsistencyError("no valid relation tree for the dual of a bi-CM graph")
    tree, matrix = trees[0]
    return model_for_tree(g, tree, matrix)


def _exponent_vector(ideal: SquarefreeIdeal, mask: int, mapping: dict[str, str]) -> tuple:
    counts: dict[str, int] = {}
    for k in iter_bits(mask):
        name = mapping.get(ideal.universe[k], ideal.universe[k])
        counts[name] = counts.get(name, 0) + 1
    return tuple(sorted(counts.items()))


def dual_specialization_check(g: Graph) -> bool:
    """Specializing the generic ideal of the model tree must reproduce the
    dual of the edge ideal (specialization commutes with Alexander duality)."""
    model = inseparable_model(g)
    tree_dual = generic_ideal(model.tree)
    images = [_exponent_vector(tree_dual, mask, model.substitution) for mask in tree_dual.gens]

    def divides(u, v):
        dv = dict(v)
        return all(dv.get(name, 0) >= e for name, e in u)

    minimal = []
    for u in images:
        if any(u != v and divides(v, u) for v in images):
            continue
        if u not in minimal:
            minimal.append(u)
    dual = alexander_dual(edge_ideal(g))
    expected = sorted(tuple(sorted((dual.universe[k], 1) for k in iter_bits(mask)))
                      for mask in dual.gens)
    return sorted(minimal) == expected


def separability_agreement(g: Graph) -> bool:
    """The neighborhood criterion must match the brute-force candidate search."""
    return is_inseparable(g) == (not is_separable_brute_force(g))
