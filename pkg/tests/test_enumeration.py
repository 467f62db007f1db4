import pytest

from bicmgraphs.enumeration import (all_graph_classes, connected_graph_classes,
                                    tree_classes)
from bicmgraphs.errors import SizeGuardError
from bicmgraphs.graphs import are_isomorphic, canonical_code, is_connected


def test_graph_class_counts():
    assert [len(all_graph_classes(n)) for n in range(1, 7)] == [1, 2, 4, 11, 34, 156]
    assert [len(connected_graph_classes(n)) for n in range(1, 7)] == [1, 1, 2, 6, 21, 112]


def test_classes_are_pairwise_non_isomorphic():
    classes = connected_graph_classes(5)
    codes = {canonical_code(g) for g in classes}
    assert len(codes) == len(classes)
    for i, g in enumerate(classes[:8]):
        for h in classes[i + 1:8]:
            assert are_isomorphic(g, h) is None


def test_classes_deterministic_order():
    a = [g.adj for g in connected_graph_classes(5)]
    all_graph_classes.cache_clear()
    b = [g.adj for g in connected_graph_classes(5)]
    assert a == b


def test_connected_flag():
    assert all(is_connected(g) for g in connected_graph_classes(6))


def test_tree_class_counts():
    assert [len(tree_classes(m)) for m in range(1, 8)] == [1, 1, 1, 2, 3, 6, 11]


def test_trees_are_trees_and_distinct():
    for m in range(2, 7):
        trees = tree_classes(m)
        codes = set()
        for t in trees:
            assert t.m == m and t.graph.edge_count() == m - 1
            codes.add(canonical_code(t.graph))
        assert len(codes) == len(trees)


def test_size_guards():
    with pytest.raises(SizeGuardError):
        all_graph_classes(9)
    with pytest.raises(SizeGuardError):
        tree_classes(9)
