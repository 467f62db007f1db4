"""Recognizers and constructors for the two classified bi-CM families.

Bipartite case: the bi-CM bipartite graphs are exactly the "staircases",
both sides of size k with edges {v_i, w_j} for i <= j after suitable
orderings.  Degrees in a staircase are distinct on each side, so sorting one
side by descending and the other by ascending degree forces the orderings.

Chordal case: either a complete graph, or the clique-complex facets that
contain a free vertex (a vertex lying in exactly one facet) partition the
vertex set, carry exactly one free vertex each, and the remaining vertices
(the center) induce a complete graph.  Facets without free vertices sit
inside the center and impose nothing; running the conditions over the facets
with free vertices is what makes the disjoint-cover condition satisfiable at
all, and the exhaustive audit double-checks this reading against the
certificate on every small graph.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InputError
from .graphs import (Graph, clique_complex_facets, is_bipartite, is_chordal,
                     is_connected, iter_bits, mask_of, vertices_of)


@dataclass(frozen=True)
class BipartiteBiCMWitness:
    """Orderings of the two sides exhibiting the staircase edge set."""

    v_order: tuple[int, ...]
    w_order: tuple[int, ...]

    def to_json_dict(self) -> dict:
        return {"family": "bipartite-staircase",
                "v_order": list(self.v_order), "w_order": list(self.w_order)}


@dataclass(frozen=True)
class ChordalBiCMWitness:
    """Facets with their free vertices, plus the complete center."""

    facets: tuple[int, ...]
    free_vertices: tuple[int, ...]
    center: int

    def to_json_dict(self) -> dict:
        return {"family": "chordal",
                "facets": [list(vertices_of(f)) for f in self.facets],
                "free_vertices": list(self.free_vertices),
                "center": list(vertices_of(self.center))}


def _staircase_edges(v_order, w_order) -> set[tuple[int, int]]:
    edges = set()
    for i, v in enumerate(v_order):
        for j, w in enumerate(w_order):
            if i <= j:
                edges.add((min(v, w), max(v, w)))
    return edges


def recognize_bipartite_bicm(g: Graph) -> BipartiteBiCMWitness | None:
    bip = is_bipartite(g)
    if bip is None:
        raise InputError("graph is not bipartite")
    if not is_connected(g):
        return None
    side_a, side_b = (vertices_of(m) for m in bip)
    if len(side_a) != len(side_b):
        return None
    actual = {(min(i, j), max(i, j)) for i, j in g.edges()}
    for left, right in ((side_a, side_b), (side_b, side_a)):
        v_order = tuple(sorted(left, key=lambda v: (-g.degree(v), v)))
        w_order = tuple(sorted(right, key=lambda w: (g.degree(w), w)))
        if _staircase_edges(v_order, w_order) == actual:
            return BipartiteBiCMWitness(v_order, w_order)
    return None


def build_bipartite_bicm(k: int) -> Graph:
    """Staircase on 2k vertices: left side 1..k, right side k+1..2k."""
    if k < 1:
        raise InputError("staircase size must be at least 1")
    edges = [(i, k + j) for i in range(1, k + 1) for j in range(i, k + 1)]
    return Graph.from_edges(2 * k, edges)


def _free_vertex_mask(g: Graph, facets) -> int:
    counts = [0] * g.n
    for f in facets:
        for v in iter_bits(f):
            counts[v] += 1
    return sum(1 << v for v in range(g.n) if counts[v] == 1)


def recognize_chordal_bicm(g: Graph) -> ChordalBiCMWitness | None:
    if is_chordal(g) is None:
        raise InputError("graph is not chordal")
    if not is_connected(g):
        return None
    facets = clique_complex_facets(g)
    if len(facets) == 1:
        # complete graph: every vertex is free; take the smallest as the
        # designated one so the witness shape stays uniform
        free = 1
        return ChordalBiCMWitness((facets[0],), (free,), facets[0] & ~(1 << (free - 1)))
    free_mask = _free_vertex_mask(g, facets)
    chosen = [f for f in facets if f & free_mask]
    union = 0
    total = 0
    frees = []
    for f in chosen:
        fm = f & free_mask
        if fm.bit_count() != 1:
            return None
        frees.append(fm.bit_length())
        union |= f
        total += f.bit_count()
    if union != g.full_mask or total != g.n:
        return None
    center = g.full_mask & ~mask_of(frees)
    for v in iter_bits(center):
        if center & ~g.adj[v] & ~(1 << v):
            return None  # center not complete
    return ChordalBiCMWitness(tuple(chosen), tuple(frees), center)


def build_chordal_bicm(center_size: int, facet_sizes) -> Graph:
    """Complete center plus one free vertex per facet.

    Facet i consists of facet_sizes[i] - 1 consecutive center vertices and
    the new free vertex center_size + i.  A single facet size with
    center_size 0 builds the complete graph.
    """
    sizes = list(facet_sizes)
    if len(sizes) == 1:
        if center_size != 0:
            raise InputError("a single facet means a complete graph; use center_size 0")
        if sizes[0] < 2:
            raise InputError("complete graph needs at least 2 vertices")
        k = sizes[0]
        return Graph.from_edges(k, [(i, j) for i in range(1, k + 1) for j in range(i + 1, k + 1)])
    if len(sizes) < 2:
        raise InputError("need at least one facet size")
    if any(s < 2 for s in sizes):
        raise InputError("every facet needs at least 2 vertices")
    if sum(s - 1 for s in sizes) != center_size:
        raise InputError("facet sizes incompatible with the center size")
    edges = [(a, b) for a in range(1, center_size + 1) for b in range(a + 1, center_size + 1)]
    next_center = 1
    for t, s in enumerate(sizes):
        free = center_size + t + 1
        block = range(next_center, next_center + s - 1)
        next_center += s - 1
        edges.extend((b, free) for b in block)
    return Graph.from_edges(center_size + len(sizes), edges)


def reduction_ideal_check(g: Graph, witness: ChordalBiCMWitness) -> bool:
    """Compare the reduction ideal with the full square of the maximal ideal.

    In the center variables, the ideal generated by the squares of the facet
    primes together with the edges lying in no listed facet must be exactly
    all quadrics; that happens precisely when the witness center is a clique.
    """
    if len(witness.facets) != len(witness.free_vertices):
        raise InputError("witness needs one free vertex per facet")
    union = 0
    total = 0
    for f, j in zip(witness.facets, witness.free_vertices):
        if not f >> (j - 1) & 1:
            raise InputError(f"free vertex {j} does not lie in its facet")
        union |= f
        total += f.bit_count()
    if union != g.full_mask or total != g.n:
        raise InputError("witness facets do not partition the vertex set")
    center = vertices_of(witness.center)
    center_set = set(center)
    pairs: set[tuple[int, int]] = set()
    for f, j in zip(witness.facets, witness.free_vertices):
        block = vertices_of(f & ~(1 << (j - 1)))
        for a in block:
            for b in block:
                if a <= b:
                    pairs.add((a, b))
    for i, j in g.edges():
        if any(f >> (i - 1) & 1 and f >> (j - 1) & 1 for f in witness.facets):
            continue
        if i not in center_set or j not in center_set:
            raise InputError("edge outside the facets touches a free vertex; invalid witness")
        pairs.add((min(i, j), max(i, j)))
    square = {(a, b) for a in center for b in center if a <= b}
    return pairs == square
