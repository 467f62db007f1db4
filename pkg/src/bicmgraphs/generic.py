"""Generic relation matrices, ideals and graphs attached to trees.

Every edge {i, j} of a tree contributes two fresh variables named
``x{i}_{j}`` and ``x{j}_{i}``.  The generic matrix has one row per edge with
those two variables as its only nonzero entries (positive on the smaller
endpoint's column).  Its maximal minors generate the generic ideal, a
codimension-2 Cohen-Macaulay ideal with linear resolution; the Alexander
dual of that ideal is the edge ideal of the generic graph, whose vertices
are the oriented edge pairs.

Minors are evaluated symbolically two independent ways: a determinant
expansion with exponent-vector bookkeeping, and the closed path-product
formula.  The tests treat any disagreement as a hard failure.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InputError
from .graphs import Graph, Tree, are_isomorphic, iter_bits
from .ideals import SquarefreeIdeal, make_ideal

Monomial = tuple[str, ...]  # variable names with multiplicity, sorted
Polynomial = dict[Monomial, int]


@dataclass(frozen=True)
class RelationMatrix:
    """(m-1) x m matrix whose rows are binomial-type relations.

    Row ``(col_a, var_a, col_b, var_b)`` means +var_a in column col_a and
    -var_b in column col_b with col_a < col_b, all other entries zero.
    """

    m: int
    rows: tuple[tuple[int, str, int, str], ...]

    def __post_init__(self):
        if len(self.rows) != self.m - 1:
            raise InputError(f"need {self.m - 1} rows, got {len(self.rows)}")
        for col_a, _, col_b, _ in self.rows:
            if not (1 <= col_a < col_b <= self.m):
                raise InputError(f"bad column pair ({col_a}, {col_b})")

    def entry(self, row: int, col: int) -> tuple[int, str] | None:
        col_a, var_a, col_b, var_b = self.rows[row]
        if col == col_a:
            return (1, var_a)
        if col == col_b:
            return (-1, var_b)
        return None

    def maximal_minors(self) -> list[Polynomial]:
        """Determinants of the submatrices dropping each column in turn."""
        out = []
        for drop in range(1, self.m + 1):
            cols = [c for c in range(1, self.m + 1) if c != drop]
            out.append(_determinant(self, cols))
        return out

    def to_json_dict(self) -> dict:
        return {"columns": self.m,
                "rows": [{"positive": {"column": a, "variable": va},
                          "negative": {"column": b, "variable": vb}}
                         for a, va, b, vb in self.rows]}


def _determinant(mat: RelationMatrix, cols: list[int]) -> Polynomial:
    """Expansion over rows; entries are signed single variables."""

    k = len(cols)

    def rec(row: int, used: int) -> Polynomial:
        if row == k:
            return {(): 1}
        acc: Polynomial = {}
        avail_before = 0
        for pos, c in enumerate(cols):
            if used >> pos & 1:
                continue
            e = mat.entry(row, c)
            if e is not None:
                coeff, var = e
                sign = -1 if avail_before % 2 else 1
                sub = rec(row + 1, used | (1 << pos))
                for mono, c2 in sub.items():
                    key = tuple(sorted(mono + (var,)))
                    val = acc.get(key, 0) + sign * coeff * c2
                    if val:
                        acc[key] = val
                    elif key in acc:
                        del acc[key]
            avail_before += 1
        return acc

    if len(mat.rows) != k:
        raise InputError("minor needs a square submatrix")
    return rec(0, 0)


def poly_is_signed_monomial(poly: Polynomial, mono: Monomial) -> bool:
    """True when the polynomial is exactly +-1 times the given monomial."""
    return len(poly) == 1 and abs(next(iter(poly.values()))) == 1 and next(iter(poly)) == tuple(sorted(mono))


def pair_name(i: int, j: int) -> str:
    return f"x{i}_{j}"


def oriented_pairs(tree: Tree) -> tuple[tuple[int, int], ...]:
    """Both orientations of every tree edge, sorted lexicographically."""
    pairs = []
    for i, j in tree.edges():
        pairs.append((i, j))
        pairs.append((j, i))
    return tuple(sorted(pairs))


def pair_universe(tree: Tree) -> tuple[str, ...]:
    return tuple(pair_name(i, j) for i, j in oriented_pairs(tree))


def generic_matrix(tree: Tree) -> RelationMatrix:
    """One row per tree edge {i, j}, i < j: +x{i}_{j} at column i, -x{j}_{i} at j."""
    if tree.m < 2:
        raise InputError("need a tree with at least one edge")
    rows = []
    for i, j in sorted(tree.edges()):
        rows.append((i, pair_name(i, j), j, pair_name(j, i)))
    return RelationMatrix(tree.m, tuple(rows))


def path_endpoints(tree: Tree, i: int, j: int) -> tuple[int, int]:
    """Second and second-to-last vertices on the unique path from i to j.

    The first value is i's neighbor toward j, the second is j's neighbor
    toward i; for adjacent vertices these are j and i themselves.
    """
    if i == j:
        raise InputError("path endpoints need two distinct vertices")
    g = tree.graph
    g._check_vertex(i)
    g._check_vertex(j)
    parent = {i: 0}
    frontier = [i]
    while frontier and j not in parent:
        nxt = []
        for v in frontier:
            for w in iter_bits(g.adj[v - 1]):
                if w + 1 not in parent:
                    parent[w + 1] = v
                    nxt.append(w + 1)
        frontier = nxt
    path = [j]
    while path[-1] != i:
        path.append(parent[path[-1]])
    path.reverse()
    return path[1], path[-2]


def generic_generators_by_vertex(tree: Tree) -> list[tuple[str, ...]]:
    """Product-formula generator for each tree vertex j: the variables
    pointing from every other vertex toward j.  Vertex order matters: the
    j-th monomial is the maximal minor dropping column j, up to sign."""
    m = tree.m
    if m < 2:
        raise InputError("need a tree with at least two vertices")
    out = []
    for j in range(1, m + 1):
        names = []
        for i in range(1, m + 1):
            if i == j:
                continue
            b, _ = path_endpoints(tree, i, j)
            names.append(pair_name(i, b))
        out.append(tuple(sorted(names)))
    return out


def generic_ideal(tree: Tree) -> SquarefreeIdeal:
    """m generators of degree m-1: for each vertex j the product over i != j
    of the variable pointing from i toward j."""
    universe = pair_universe(tree)
    index = {name: k for k, name in enumerate(universe)}
    masks = []
    for names in generic_generators_by_vertex(tree):
        mask = 0
        for name in names:
            mask |= 1 << index[name]
        masks.append(mask)
    return make_ideal(universe, masks)


def generic_graph(tree: Tree) -> tuple[Graph, tuple[tuple[int, int], ...]]:
    """The graph whose edge ideal is the Alexander dual of the generic ideal.

    Vertices are the oriented pairs (in lexicographic order, which fixes the
    numbering); for every pair of tree vertices i < j there is one edge
    joining (i, b(i,j)) and (j, e(i,j)).  Returns the graph together with the
    pair table mapping vertex number t to pairs[t-1].
    """
    m = tree.m
    if m < 2:
        raise InputError("need a tree with at least two vertices")
    pairs = oriented_pairs(tree)
    index = {p: t + 1 for t, p in enumerate(pairs)}
    edges = []
    for i in range(1, m + 1):
        for j in range(i + 1, m + 1):
            b, e = path_endpoints(tree, i, j)
            edges.append((index[(i, b)], index[(j, e)]))
    return Graph.from_edges(len(pairs), edges), pairs


def generic_graph_edge_ideal(tree: Tree) -> SquarefreeIdeal:
    """Edge ideal of the generic graph written in the pair variables.

    Vertex t of the generic graph corresponds to position t of the pair
    universe, so edges translate to masks directly.
    """
    g, _ = generic_graph(tree)
    universe = pair_universe(tree)
    masks = [(1 << (a - 1)) | (1 << (b - 1)) for a, b in g.edges()]
    return make_ideal(universe, masks)


def recover_tree(g: Graph):
    """For an inseparable bi-CM graph, the unique tree whose generic graph is
    isomorphic to it, together with the vertex-to-pair bijection.

    Returns (tree, mapping vertex of g -> oriented pair) or None.
    """
    from .bicm import certify_bicm
    from .separation import is_inseparable, relation_trees

    from .ideals import alexander_dual, edge_ideal

    if not certify_bicm(g).verdict:
        return None
    if not is_inseparable(g):
        return None
    candidates = relation_trees(alexander_dual(edge_ideal(g)))
    for tree, _ in candidates:
        model, pairs = generic_graph(tree)
        iso = are_isomorphic(g, model)
        if iso is not None:
            return tree, {v: pairs[iso[v] - 1] for v in range(1, g.n + 1)}
    return None
