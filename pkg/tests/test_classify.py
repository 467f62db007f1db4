import pytest

from bicmgraphs.bicm import certify_bicm
from bicmgraphs.classify import (ChordalBiCMWitness, build_bipartite_bicm,
                                 build_chordal_bicm, recognize_bipartite_bicm,
                                 recognize_chordal_bicm, reduction_ideal_check)
from bicmgraphs.errors import InputError
from bicmgraphs.graphs import Graph, are_isomorphic, mask_of, vertices_of


def test_build_bipartite_staircase():
    single = build_bipartite_bicm(1)
    assert single.edges() == [(1, 2)]
    p4_like = build_bipartite_bicm(2)
    assert are_isomorphic(p4_like, Graph.from_edges(4, [(1, 2), (2, 3), (3, 4)])) is not None
    big = build_bipartite_bicm(4)
    assert big.edge_count() == 10  # 1+2+3+4, and C(4+1, 2) = 10
    for k in range(1, 5):
        assert certify_bicm(build_bipartite_bicm(k)).verdict
    with pytest.raises(InputError):
        build_bipartite_bicm(0)


def test_recognize_bipartite_staircase(p4, triangle):
    big = build_bipartite_bicm(4)
    w = recognize_bipartite_bicm(big)
    assert w is not None
    assert w.v_order == (1, 2, 3, 4) and w.w_order == (5, 6, 7, 8)
    assert recognize_bipartite_bicm(p4) is not None
    with pytest.raises(InputError):
        recognize_bipartite_bicm(triangle)
    c8 = Graph.from_edges(8, [(i, i % 8 + 1) for i in range(1, 9)])
    assert not certify_bicm(c8).verdict
    assert recognize_bipartite_bicm(c8) is None


def test_recognize_rejects_unbalanced_sides():
    star = Graph.from_edges(4, [(1, 2), (1, 3), (1, 4)])
    assert recognize_bipartite_bicm(star) is None


def test_staircase_round_trip():
    for k in range(1, 5):
        g = build_bipartite_bicm(k)
        w = recognize_bipartite_bicm(g)
        assert w is not None
        # witness reproduces the staircase edge set
        edges = {(min(v, x), max(v, x))
                 for i, v in enumerate(w.v_order)
                 for j, x in enumerate(w.w_order) if i <= j}
        assert edges == {tuple(sorted(e)) for e in g.edges()}


def test_recognize_chordal_complete():
    k5 = Graph.from_edges(5, [(i, j) for i in range(1, 6) for j in range(i + 1, 6)])
    w = recognize_chordal_bicm(k5)
    assert w is not None and len(w.facets) == 1
    assert reduction_ideal_check(k5, w)


def test_recognize_chordal_path(p4):
    w = recognize_chordal_bicm(p4)
    assert w is not None
    assert {vertices_of(f) for f in w.facets} == {(1, 2), (3, 4)}
    assert set(w.free_vertices) == {1, 4}
    assert vertices_of(w.center) == (2, 3)
    assert reduction_ideal_check(p4, w)


def test_recognize_chordal_diamond_tail(diamond_tail):
    w = recognize_chordal_bicm(diamond_tail)
    assert w is not None
    assert {vertices_of(f) for f in w.facets} == {(1, 2, 3), (4, 5)}
    assert set(w.free_vertices) == {1, 5}
    assert vertices_of(w.center) == (2, 3, 4)
    assert reduction_ideal_check(diamond_tail, w)


def test_recognize_chordal_rejections(four_cycle):
    with pytest.raises(InputError):
        recognize_chordal_bicm(four_cycle)
    paw = Graph.from_edges(4, [(1, 2), (1, 3), (2, 3), (3, 4)])
    assert recognize_chordal_bicm(paw) is None
    assert not certify_bicm(paw).verdict


def test_build_chordal():
    p4_like = build_chordal_bicm(2, [2, 2])
    assert are_isomorphic(p4_like, Graph.from_edges(4, [(1, 2), (2, 3), (3, 4)])) is not None
    k4_pendants = build_chordal_bicm(4, [2, 2, 2, 2])
    assert k4_pendants.n == 8 and k4_pendants.edge_count() == 10
    assert certify_bicm(k4_pendants).verdict
    w = recognize_chordal_bicm(k4_pendants)
    assert w is not None and vertices_of(w.center) == (1, 2, 3, 4)
    assert reduction_ideal_check(k4_pendants, w)
    kn = build_chordal_bicm(0, [6])
    assert kn.edge_count() == 15
    # mixed facet sizes around a K4 center
    mixed = build_chordal_bicm(4, [3, 2, 2])
    assert certify_bicm(mixed).verdict
    assert recognize_chordal_bicm(mixed) is not None
    with pytest.raises(InputError):
        build_chordal_bicm(3, [2, 2])  # sizes sum to 2, not 3
    with pytest.raises(InputError):
        build_chordal_bicm(2, [2, 1])
    with pytest.raises(InputError):
        build_chordal_bicm(1, [5])


def test_build_then_recognize_round_trip():
    for center, sizes in [(2, [2, 2]), (4, [2, 2, 2, 2]), (4, [3, 3]),
                          (5, [3, 2, 2, 2]), (3, [4])]:
        if len(sizes) == 1:
            g = build_chordal_bicm(0, sizes)
        else:
            g = build_chordal_bicm(center, sizes)
        w = recognize_chordal_bicm(g)
        assert w is not None
        assert certify_bicm(g).verdict
        assert reduction_ideal_check(g, w)


def test_reduction_check_sees_broken_center(two_edges):
    # witness-shaped data whose center misses an edge: the quadric x2*x3
    # never shows up, so the comparison fails rather than erroring
    w = ChordalBiCMWitness(facets=(mask_of([1, 2]), mask_of([3, 4])),
                           free_vertices=(1, 4), center=mask_of([2, 3]))
    assert reduction_ideal_check(two_edges, w) is False


def test_reduction_check_validates_shape(p4):
    bad = ChordalBiCMWitness(facets=(mask_of([1, 2]),), free_vertices=(1,),
                             center=mask_of([2, 3]))
    with pytest.raises(InputError):
        reduction_ideal_check(p4, bad)
