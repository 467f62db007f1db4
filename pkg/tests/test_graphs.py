import pytest

import oracles
from bicmgraphs.errors import InputError, SizeGuardError
from bicmgraphs.graphs import (Graph, Tree, are_isomorphic, canonical_code,
                               clique_complex_facets, complement,
                               connected_components, graph_from_json_dict,
                               graph_to_json_dict, independence_number,
                               induced_subgraph, is_bipartite, is_chordal,
                               is_connected, mask_of, maximal_independent_sets,
                               minimal_vertex_covers, neighborhood_complement,
                               parse_edge_list, relabel, to_dot, vertices_of)


def vsets(masks_):
    return {vertices_of(m) for m in masks_}


def test_construction_validates():
    with pytest.raises(InputError):
        Graph.from_edges(3, [(1, 1)])
    with pytest.raises(InputError):
        Graph.from_edges(3, [(1, 4)])
    with pytest.raises(InputError):
        Graph(2, (1, 0))  # asymmetric
    with pytest.raises(SizeGuardError):
        Graph.from_edges(65, [(1, 2)])


def test_tree_validation(p4, triangle):
    Tree(p4)
    with pytest.raises(InputError):
        Tree(triangle)
    with pytest.raises(InputError):
        Tree(Graph.from_edges(4, [(1, 2), (3, 4)]))


def test_is_connected(triangle, two_edges, diamond_tail):
    assert is_connected(triangle)
    assert not is_connected(two_edges)
    assert is_connected(diamond_tail)
    assert vsets(connected_components(two_edges)) == {(1, 2), (3, 4)}


def test_independence_number(p4, diamond_tail):
    k4 = Graph.from_edges(4, [(i, j) for i in range(1, 5) for j in range(i + 1, 5)])
    assert independence_number(k4) == 1
    # brute force over all 16 subsets fixes the value 2
    assert oracles.independence_number(4, p4.edges()) == 2
    assert independence_number(p4) == 2
    # and over all 32 subsets for the five-vertex example
    assert oracles.independence_number(5, diamond_tail.edges()) == 2
    assert independence_number(diamond_tail) == 2


def test_minimal_vertex_covers(triangle, p4, diamond_tail):
    assert vsets(minimal_vertex_covers(triangle)) == {(1, 2), (1, 3), (2, 3)}
    assert vsets(minimal_vertex_covers(diamond_tail)) == {
        (2, 3, 4), (1, 3, 4), (2, 3, 5), (1, 2, 4)}
    covers = minimal_vertex_covers(p4)
    assert vsets(covers) == {(2, 3), (1, 3), (2, 4)}
    assert {frozenset(v) for v in vsets(covers)} == \
        {frozenset(c) for c in oracles.minimal_vertex_covers(4, p4.edges())}
    # canonical order: by (cardinality, mask)
    assert covers == sorted(covers, key=lambda m: (bin(m).count('1'), m))


def test_cover_independent_set_bijection():
    # complements of minimal covers are exactly the maximal independent sets
    import random
    rng = random.Random(7)
    for _ in range(60):
        n = rng.randint(2, 7)
        edges = [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)
                 if rng.random() < 0.5]
        if not edges:
            continue
        g = Graph.from_edges(n, edges)
        covers = vsets(minimal_vertex_covers(g))
        mis = {frozenset(s) for s in oracles.maximal_independent_sets(n, edges)}
        assert {frozenset(set(range(1, n + 1)) - set(c)) for c in covers} == mis
        assert len(covers) == len(mis)


def test_clique_complex_facets(triangle, p4):
    assert vsets(clique_complex_facets(triangle)) == {(1, 2, 3)}
    assert vsets(clique_complex_facets(p4)) == {(1, 2), (2, 3), (3, 4)}
    k4p = Graph.from_edges(5, [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4), (1, 5)])
    assert vsets(clique_complex_facets(k4p)) == {(1, 2, 3, 4), (1, 5)}
    assert {frozenset(c) for c in vsets(clique_complex_facets(k4p))} == \
        {frozenset(c) for c in oracles.maximal_cliques(5, k4p.edges())}


def test_is_bipartite(p4, triangle):
    assert is_bipartite(p4) == (mask_of([1, 3]), mask_of([2, 4]))
    assert is_bipartite(triangle) is None
    staircase = Graph.from_edges(8, [(i, 4 + j) for i in range(1, 5) for j in range(i, 5)])
    sides = is_bipartite(staircase)
    assert sides == (mask_of([1, 2, 3, 4]), mask_of([5, 6, 7, 8]))


def test_is_chordal(p4, four_cycle, diamond_tail):
    assert is_chordal(p4) is not None
    assert is_chordal(four_cycle) is None
    assert is_chordal(diamond_tail) is not None
    assert oracles.is_chordal(5, diamond_tail.edges())
    assert not oracles.is_chordal(4, four_cycle.edges())


def test_is_chordal_matches_brute_force():
    import random
    rng = random.Random(11)
    for _ in range(80):
        n = rng.randint(3, 7)
        edges = [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)
                 if rng.random() < 0.45]
        if not edges:
            continue
        g = Graph.from_edges(n, edges)
        assert (is_chordal(g) is not None) == oracles.is_chordal(n, edges)


def test_peo_property(diamond_tail):
    order = is_chordal(diamond_tail)
    pos = {v: k for k, v in enumerate(order)}
    for v in order:
        later = [w for w in diamond_tail.neighbors(v) if pos[w] > pos[v]]
        for a in later:
            for b in later:
                if a < b:
                    assert diamond_tail.has_edge(a, b)


def test_neighborhood_complement(triangle, p4):
    h, verts = neighborhood_complement(triangle, 1)
    assert verts == (2, 3)
    assert h.edge_count() == 0 and h.n == 2
    star = Graph.from_edges(4, [(1, 2), (1, 3), (1, 4)])
    h, verts = neighborhood_complement(star, 1)
    assert verts == (2, 3, 4)
    assert h.edge_count() == 3  # complete on the leaves
    h, verts = neighborhood_complement(p4, 2)
    assert verts == (1, 3)
    assert h.edges() == [(1, 2)]  # the single pair {1,3}, locally renamed
    with pytest.raises(InputError):
        neighborhood_complement(p4, 9)


def test_are_isomorphic(triangle, p4, bent_path):
    ident = are_isomorphic(triangle, triangle)
    assert ident is not None
    mapping = are_isomorphic(p4, bent_path)
    assert mapping is not None
    for a, b in p4.edges():
        assert bent_path.has_edge(mapping[a], mapping[b])
    p3 = Graph.from_edges(3, [(1, 2), (2, 3)])
    assert are_isomorphic(triangle, p3) is None
    with pytest.raises(SizeGuardError):
        are_isomorphic(Graph(13, (0,) * 13), Graph(13, (0,) * 13))


def test_canonical_code_is_invariant():
    import random
    rng = random.Random(3)
    for _ in range(40):
        n = rng.randint(2, 7)
        edges = [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)
                 if rng.random() < 0.5]
        g = Graph.from_edges(n, edges)
        perm = list(range(n))
        rng.shuffle(perm)
        assert canonical_code(g) == canonical_code(relabel(g, tuple(perm)))


def test_induced_and_complement(diamond_tail):
    sub, verts = induced_subgraph(diamond_tail, mask_of([2, 3, 4]))
    assert verts == (2, 3, 4)
    assert sub.edge_count() == 3
    assert complement(complement(diamond_tail)).adj == diamond_tail.adj


def test_json_and_edge_list_round_trip(diamond_tail):
    d = graph_to_json_dict(diamond_tail)
    assert graph_from_json_dict(d).adj == diamond_tail.adj
    text = "\n".join(f"{i} {j}" for i, j in diamond_tail.edges()) + "\n# done\n"
    assert parse_edge_list(text).adj == diamond_tail.adj
    with pytest.raises(InputError, match="line 2"):
        parse_edge_list("1 2\n2\n")
    with pytest.raises(InputError):
        graph_from_json_dict({"n": 2})
    assert "1 -- 2" in to_dot(diamond_tail)


def test_maximal_independent_sets_order(p4):
    mis = maximal_independent_sets(p4)
    assert list(mis) == sorted(mis, key=lambda m: (bin(m).count('1'), m))
    assert vsets(mis) == {(1, 3), (1, 4), (2, 4)}
