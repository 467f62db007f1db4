import random

import pytest

import oracles
from bicmgraphs.errors import InputError, SizeGuardError
from bicmgraphs.graphs import Graph, relabel
from bicmgraphs.ideals import (alexander_dual, edge_ideal, make_ideal,
                               minimalize_masks, squarefree_veronese,
                               std_universe, supports)
from bicmgraphs.resolutions import (FieldSpec, SimplicialComplex, betti_table,
                                    eagon_reiner_check, has_linear_resolution,
                                    independence_complex, is_cohen_macaulay,
                                    krull_dimension, rank_mod_p, rank_rational,
                                    reduced_homology_ranks, _hochster_direct,
                                    _hochster_via_dual)


def test_field_spec_validation():
    FieldSpec(0)
    FieldSpec(2)
    FieldSpec(101)
    with pytest.raises(InputError):
        FieldSpec(4)
    with pytest.raises(InputError):
        FieldSpec(-3)


def test_homology_conventions():
    void = SimplicialComplex.from_facets(3, [])
    just_empty = SimplicialComplex.from_facets(3, [0])
    assert reduced_homology_ranks(void) == []
    assert reduced_homology_ranks(just_empty) == [1]
    hollow = SimplicialComplex.from_facets(3, [0b011, 0b101, 0b110])
    assert reduced_homology_ranks(hollow) == [0, 0, 1]  # a circle
    simplex = SimplicialComplex.from_facets(3, [0b111])
    assert reduced_homology_ranks(simplex) == [0, 0, 0, 0]
    two_points = SimplicialComplex.from_facets(2, [0b01, 0b10])
    assert reduced_homology_ranks(two_points) == [0, 1]


def test_homology_matches_oracle():
    rng = random.Random(5)
    for _ in range(40):
        n = rng.randint(2, 5)
        facets = [rng.randint(1, (1 << n) - 1) for _ in range(rng.randint(1, 4))]
        cx = SimplicialComplex.from_facets(n, facets)
        faces = {frozenset(k + 1 for k in range(n) if f >> k & 1) for f in cx.faces()}
        for p in (0, 2, 3):
            got = reduced_homology_ranks(cx, FieldSpec(p))
            want = oracles.homology_ranks(faces, p)
            assert got == want, (facets, p)


def test_independence_complex(triangle, p4, diamond_tail):
    assert independence_complex(triangle).facets == (0b001, 0b010, 0b100)
    assert set(independence_complex(p4).facets) == {0b0101, 0b1001, 0b1010}
    want = {0b10001, 0b01001, 0b10010, 0b10100}  # {1,5},{1,4},{2,5},{3,5}
    assert set(independence_complex(diamond_tail).facets) == want


def test_betti_tables(p4, diamond_tail):
    # oracle first: plain Hochster sums with Fraction arithmetic
    assert oracles.betti_of_ideal(4, supports(edge_ideal(p4))) == [3, 2]
    table = betti_table(edge_ideal(p4))
    assert table.ideal_betti() == [3, 2]
    assert oracles.betti_of_ideal(5, supports(edge_ideal(diamond_tail))) == [6, 8, 3]
    assert betti_table(edge_ideal(diamond_tail)).ideal_betti() == [6, 8, 3]
    principal = make_ideal(std_universe(1), [0b1])
    assert betti_table(principal).ideal_betti() == [1]


def test_betti_entries_shape(diamond_tail):
    table = betti_table(edge_ideal(diamond_tail))
    assert table.entries[(0, 0)] == 1
    assert all(r >= 0 for r in table.entries.values())
    assert table.pd == 3
    assert table.regularity == 1
    j = table.to_json_dict()
    assert j["entries"][0] == [0, 0, 1]


def test_cohen_macaulay(p4, four_cycle, two_edges, diamond_tail):
    assert is_cohen_macaulay(edge_ideal(p4))
    assert is_cohen_macaulay(edge_ideal(diamond_tail))
    # the square is unmixed but not CM: its independence complex is
    # disconnected in the top dimension
    assert not is_cohen_macaulay(edge_ideal(four_cycle))
    # two disjoint edges form a complete intersection, hence CM,
    # while the resolution is visibly non-linear
    assert is_cohen_macaulay(edge_ideal(two_edges))
    assert not has_linear_resolution(edge_ideal(two_edges))
    assert betti_table(edge_ideal(two_edges)).ideal_betti() == [2, 1]


def test_linear_resolution(triangle, two_edges):
    assert has_linear_resolution(edge_ideal(triangle))
    assert not has_linear_resolution(edge_ideal(two_edges))
    assert has_linear_resolution(squarefree_veronese(3, 2))
    assert has_linear_resolution(squarefree_veronese(5, 3))
    mixed = make_ideal(std_universe(3), [0b001, 0b110])
    assert not has_linear_resolution(mixed)


def test_eagon_reiner(p4, four_cycle):
    assert eagon_reiner_check(edge_ideal(p4))
    assert eagon_reiner_check(edge_ideal(four_cycle))
    rng = random.Random(2)
    for _ in range(30):
        n = rng.randint(2, 6)
        edges = [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)
                 if rng.random() < 0.5]
        g = Graph.from_edges(n, edges)
        if g.isolated_vertices():
            continue
        for p in (0, 2):
            assert eagon_reiner_check(edge_ideal(g), FieldSpec(p))


def test_euler_characteristic_consistency(diamond_tail, four_cycle):
    for g in (diamond_tail, four_cycle):
        cx = independence_complex(g)
        ranks = reduced_homology_ranks(cx)
        alternating = sum((-1) ** d * r for d, r in enumerate(ranks, start=-1))
        assert alternating == cx.reduced_euler_characteristic()


def test_euler_characteristic_signed():
    # chi~ = sum_d (-1)^d rank H~_d exactly, including the sign
    rng = random.Random(9)
    for _ in range(30):
        n = rng.randint(2, 5)
        facets = [rng.randint(1, (1 << n) - 1) for _ in range(rng.randint(1, 4))]
        cx = SimplicialComplex.from_facets(n, facets)
        ranks = reduced_homology_ranks(cx)
        chi = sum((-1) ** d * r for d, r in enumerate(ranks, start=-1))
        faces = cx.faces()
        chi_faces = sum((-1) ** (f.bit_count() - 1) for f in faces)
        assert chi == chi_faces


def test_hochster_strategies_agree(diamond_tail, four_cycle, two_edges):
    for g in (diamond_tail, four_cycle, two_edges):
        ideal = edge_ideal(g)
        n = ideal.num_vars
        full = (1 << n) - 1
        sr = minimalize_masks(full ^ m for m in alexander_dual(ideal).gens)
        for p in (0, 2):
            direct = _hochster_direct(n, sr, FieldSpec(p))
            via = _hochster_via_dual(n, ideal.gens, FieldSpec(p))
            assert {k: v for k, v in direct.items() if v} == {k: v for k, v in via.items() if v}


def test_betti_invariant_under_relabeling(diamond_tail):
    rng = random.Random(4)
    base = betti_table(edge_ideal(diamond_tail)).to_json_dict()
    for _ in range(5):
        perm = list(range(5))
        rng.shuffle(perm)
        h = relabel(diamond_tail, tuple(perm))
        assert betti_table(edge_ideal(h)).to_json_dict() == base


def test_depth_bookkeeping():
    rng = random.Random(6)
    for _ in range(25):
        n = rng.randint(2, 6)
        edges = [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)
                 if rng.random() < 0.5]
        g = Graph.from_edges(n, edges)
        if g.isolated_vertices():
            continue
        ideal = edge_ideal(g)
        table = betti_table(ideal)
        depth = n - table.pd
        assert 0 <= depth <= krull_dimension(ideal)


def test_rank_helpers():
    assert rank_rational([[2, 4], [1, 2]]) == 1
    assert rank_rational([[1, 0], [0, 1], [1, 1]]) == 2
    assert rank_mod_p([[2, 4], [1, 2]], 3) == 1
    assert rank_mod_p([[1, 1], [1, -1]], 2) == 1  # drops rank in char 2
    assert rank_rational([[1, 1], [1, -1]]) == 2


def test_size_guard():
    big = make_ideal(std_universe(21), [0b11])
    with pytest.raises(SizeGuardError):
        betti_table(big)


def test_characteristic_two_table(diamond_tail):
    t0 = betti_table(edge_ideal(diamond_tail), FieldSpec(0))
    t2 = betti_table(edge_ideal(diamond_tail), FieldSpec(2))
    assert t0.to_json_dict() == t2.to_json_dict()


def test_pretty_diagram(diamond_tail):
    text = betti_table(edge_ideal(diamond_tail)).pretty()
    assert "total:" in text and "8" in text
