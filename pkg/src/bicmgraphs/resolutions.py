"""Simplicial homology over exact fields and graded Betti tables.

Conventions, fixed and unit-tested:

* the void complex (no faces at all) has no reduced homology;
* the empty complex {∅} has H~_{-1} = K and nothing else;
* every rank is computed exactly: fraction-free integer elimination in
  characteristic 0, modular elimination at a prime.

The Betti table of S/I is assembled from reduced homology of induced
subcomplexes over all 2^n vertex subsets.  Two equivalent evaluation routes
exist: directly on the Stanley-Reisner complex of I, or on small auxiliary
complexes obtained from the generators through combinatorial Alexander
duality.  Whichever side presents fewer facets is used; the test suite pins
both routes against each other.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import InputError, SizeGuardError
from .graphs import Graph, iter_bits, maximal_independent_sets
from .ideals import SquarefreeIdeal, alexander_dual, minimalize_masks

HOCHSTER_MAX_VARS = 20


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    k = 2
    while k * k <= p:
        if p % k == 0:
            return False
        k += 1
    return True


@dataclass(frozen=True)
class FieldSpec:
    """The coefficient field, known to the computation only by characteristic."""

    characteristic: int = 0

    def __post_init__(self):
        c = self.characteristic
        if c != 0 and not _is_prime(c):
            raise InputError(f"characteristic must be 0 or prime, got {c}")


@dataclass(frozen=True)
class SimplicialComplex:
    """Facet list on vertices 1..n; () is void and (0,) is the complex {∅}."""

    n: int
    facets: tuple[int, ...]

    @staticmethod
    def from_facets(n: int, masks) -> "SimplicialComplex":
        maximal = _maximalize(list(masks))
        return SimplicialComplex(n, maximal)

    def is_void(self) -> bool:
        return not self.facets

    def dim(self) -> int:
        if self.is_void():
            raise InputError("the void complex has no dimension")
        return max(f.bit_count() for f in self.facets) - 1

    def faces(self) -> set[int]:
        return _faces_of(self.facets)

    def face_counts(self) -> list[int]:
        """f-vector indexed from dimension -1."""
        if self.is_void():
            return []
        counts = [0] * (self.dim() + 2)
        for f in self.faces():
            counts[f.bit_count()] += 1
        return counts

    def reduced_euler_characteristic(self) -> int:
        if self.is_void():
            return 0
        chi = 0
        for f in self.faces():
            chi += -1 if f.bit_count() % 2 == 0 else 1
        return chi


def _maximalize(masks: list[int]) -> tuple[int, ...]:
    uniq = sorted(set(masks), key=lambda m: (m.bit_count(), m))
    out = []
    for i, m in enumerate(uniq):
        if not any(m & k == m for k in uniq[i + 1:] if k != m):
            out.append(m)
    return tuple(out)


def _faces_of(facets) -> set[int]:
    faces: set[int] = set()
    for f in facets:
        if f in faces:
            continue
        sub = f
        while True:
            faces.add(sub)
            if sub == 0:
                break
            sub = (sub - 1) & f
    return faces


def independence_complex(g: Graph) -> SimplicialComplex:
    """Faces are the independent vertex sets of the graph."""
    return SimplicialComplex.from_facets(g.n, maximal_independent_sets(g))


# ---------------------------------------------------------------------------
# Exact rank computation


def rank_rational(rows: list[list[int]]) -> int:
    """Rank over Q of an integer matrix, by Bareiss fraction-free elimination."""
    m = [row[:] for row in rows if any(row)]
    if not m:
        return 0
    ncols = len(m[0])
    rank = 0
    prev = 1
    for col in range(ncols):
        piv = None
        for r in range(rank, len(m)):
            if m[r][col]:
                piv = r
                break
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        p = m[rank][col]
        for r in range(rank + 1, len(m)):
            factor = m[r][col]
            if factor == 0 and prev == 1:
                continue
            row_r, row_p = m[r], m[rank]
            for c in range(col, ncols):
                row_r[c] = (p * row_r[c] - factor * row_p[c]) // prev
        prev = p
        rank += 1
        if rank == len(m):
            break
    return rank


def rank_mod_p(rows: list[list[int]], p: int) -> int:
    m = [[v % p for v in row] for row in rows]
    m = [row for row in m if any(row)]
    if not m:
        return 0
    ncols = len(m[0])
    rank = 0
    for col in range(ncols):
        piv = None
        for r in range(rank, len(m)):
            if m[r][col]:
                piv = r
                break
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        inv = pow(m[rank][col], p - 2, p)
        row_p = m[rank]
        for r in range(rank + 1, len(m)):
            factor = m[r][col]
            if factor:
                mult = factor * inv % p
                row_r = m[r]
                for c in range(col, ncols):
                    row_r[c] = (row_r[c] - mult * row_p[c]) % p
        rank += 1
        if rank == len(m):
            break
    return rank


def _matrix_rank(rows: list[list[int]], field: FieldSpec) -> int:
    if field.characteristic == 0:
        return rank_rational(rows)
    return rank_mod_p(rows, field.characteristic)


def _homology_from_faces(faces: set[int], field: FieldSpec) -> list[int]:
    """Reduced homology ranks for dimensions -1..dim, from an explicit face set."""
    if not faces:
        return []
    by_dim: dict[int, list[int]] = {}
    for f in faces:
        by_dim.setdefault(f.bit_count() - 1, []).append(f)
    top = max(by_dim)
    for d in by_dim:
        by_dim[d].sort()
    boundary_rank: dict[int, int] = {}
    for d in range(0, top + 1):
        upper = by_dim.get(d, [])
        lower = by_dim.get(d - 1, [])
        if not upper or not lower:
            boundary_rank[d] = 0
            continue
        index = {f: c for c, f in enumerate(lower)}
        rows = []
        for f in upper:
            row = [0] * len(lower)
            sign = 1
            for v in iter_bits(f):
                row[index[f ^ (1 << v)]] = sign
                sign = -sign
            rows.append(row)
        boundary_rank[d] = _matrix_rank(rows, field)
    ranks = []
    for d in range(-1, top + 1):
        f_d = len(by_dim.get(d, []))
        ranks.append(f_d - boundary_rank.get(d, 0) - boundary_rank.get(d + 1, 0))
    return ranks


def reduced_homology_ranks(cx: SimplicialComplex, field: FieldSpec = FieldSpec(0)) -> list[int]:
    """dim_K of the reduced homology in dimensions -1..dim(cx); [] for void."""
    return _homology_from_faces(_faces_of(cx.facets), field)


# ---------------------------------------------------------------------------
# Graded Betti numbers


@dataclass
class BettiTable:
    """Graded Betti numbers of S/I: entries[(i, j)] = beta_{i,j}(S/I)."""

    n: int
    entries: dict[tuple[int, int], int]

    @property
    def pd(self) -> int:
        return max((i for (i, _), r in self.entries.items() if r), default=0)

    @property
    def regularity(self) -> int:
        return max((j - i for (i, j), r in self.entries.items() if r), default=0)

    def total(self, i: int) -> int:
        return sum(r for (a, _), r in self.entries.items() if a == i)

    def ideal_betti(self) -> list[int]:
        """Total Betti numbers of the ideal itself: beta_i(I) = beta_{i+1}(S/I)."""
        return [self.total(i + 1) for i in range(self.pd)]

    def to_json_dict(self) -> dict:
        items = sorted((i, j, r) for (i, j), r in self.entries.items() if r)
        return {"n": self.n, "entries": [[i, j, r] for i, j, r in items]}

    def pretty(self) -> str:
        """Betti diagram: row t holds beta_{i, i+t}, one column per i."""
        pd, reg = self.pd, self.regularity
        width = max(len(str(r)) for r in list(self.entries.values()) + [0]) + 2
        width = max(width, len(str(pd)) + 2)
        head = "      " + "".join(str(i).rjust(width) for i in range(pd + 1))
        lines = [head]
        totals = [self.total(i) for i in range(pd + 1)]
        lines.append("total:" + "".join(str(t).rjust(width) for t in totals))
        for t in range(reg + 1):
            cells = []
            for i in range(pd + 1):
                r = self.entries.get((i, i + t), 0)
                cells.append((str(r) if r else ".").rjust(width))
            lines.append(f"{t}:".ljust(6) + "".join(cells))
        return "\n".join(lines)


def _cone_vertex_exists(facets: tuple[int, ...]) -> bool:
    """True if some vertex lies in every facet: the complex is then a cone
    and all reduced homology vanishes."""
    if not facets or facets == (0,):
        return False
    common = facets[0]
    for f in facets[1:]:
        common &= f
        if not common:
            return False
    return True


def _restricted_facets(facets: tuple[int, ...], w: int) -> tuple[int, ...]:
    return _maximalize([f & w for f in facets])


def _hochster_direct(n: int, sr_facets: tuple[int, ...], field: FieldSpec) -> dict:
    """beta_{i,W}(S/I) = dim H~_{|W|-i-1} of the induced subcomplex on W."""
    entries: dict[tuple[int, int], int] = {}
    for w in range(1 << n):
        size = w.bit_count()
        local = _restricted_facets(sr_facets, w)
        if local == (0,):
            # only the empty face survives inside W
            entries[(size, size)] = entries.get((size, size), 0) + 1
            continue
        if _cone_vertex_exists(local):
            continue
        ranks = _homology_from_faces(_faces_of(local), field)
        for d, r in enumerate(ranks, start=-1):
            if r:
                i = size - 1 - d
                if i >= 0:
                    entries[(i, size)] = entries.get((i, size), 0) + r
    return entries


def _hochster_via_dual(n: int, gens: tuple[int, ...], field: FieldSpec) -> dict:
    """Same table from the generators only.

    For W with complement U, the complex whose faces G satisfy
    "G ∪ U avoids some generator support inside W" is Alexander dual inside W
    to the induced Stanley-Reisner subcomplex, so its H~_{i-2} gives
    beta_{i,W}(S/I).
    """
    entries: dict[tuple[int, int], int] = {(0, 0): 1}
    for w in range(1, (1 << n)):
        size = w.bit_count()
        inside = [g for g in gens if g & ~w == 0]
        if not inside:
            continue
        local = _maximalize([w & ~g for g in inside])
        if local == (0,):
            entries[(1, size)] = entries.get((1, size), 0) + 1
            continue
        if _cone_vertex_exists(local):
            continue
        ranks = _homology_from_faces(_faces_of(local), field)
        for d, r in enumerate(ranks, start=-1):
            if r:
                i = d + 2
                entries[(i, size)] = entries.get((i, size), 0) + r
    return entries


@lru_cache(maxsize=4096)
def _betti_entries(ideal: SquarefreeIdeal, field: FieldSpec) -> tuple:
    n = ideal.num_vars
    if n > HOCHSTER_MAX_VARS:
        raise SizeGuardError(f"Betti tables limited to {HOCHSTER_MAX_VARS} variables")
    if not ideal.gens:
        raise InputError("Betti table of the zero ideal is trivial; not supported")
    full = (1 << n) - 1
    sr_facets = minimalize_masks(full ^ g for g in alexander_dual(ideal).gens)
    if len(sr_facets) <= len(ideal.gens):
        entries = _hochster_direct(n, sr_facets, field)
    else:
        entries = _hochster_via_dual(n, ideal.gens, field)
    return tuple(sorted((i, j, r) for (i, j), r in entries.items() if r))


def betti_table(ideal: SquarefreeIdeal, field: FieldSpec = FieldSpec(0)) -> BettiTable:
    """Full graded Betti table of S/I over the given field."""
    items = _betti_entries(ideal, field)
    return BettiTable(ideal.num_vars, {(i, j): r for i, j, r in items})


def krull_dimension(ideal: SquarefreeIdeal) -> int:
    """dim S/I = size of the largest face of the Stanley-Reisner complex."""
    full = (1 << ideal.num_vars) - 1
    return max((full ^ g).bit_count() for g in alexander_dual(ideal).gens)


def is_cohen_macaulay(ideal: SquarefreeIdeal, field: FieldSpec = FieldSpec(0)) -> bool:
    """Projective dimension of S/I equals the codimension."""
    bt = betti_table(ideal, field)
    return bt.pd == ideal.num_vars - krull_dimension(ideal)


def has_linear_resolution(ideal: SquarefreeIdeal, field: FieldSpec = FieldSpec(0)) -> bool:
    """All syzygy degrees minimal; False when generation is not equigraded."""
    degs = set(ideal.degrees())
    if len(degs) != 1:
        return False
    d = degs.pop()
    bt = betti_table(ideal, field)
    return all(j == i - 1 + d for (i, j), r in bt.entries.items() if i >= 1 and r)


def eagon_reiner_check(ideal: SquarefreeIdeal, field: FieldSpec = FieldSpec(0)) -> bool:
    """Self-test: Cohen-Macaulayness of I must match linearity of the dual."""
    return is_cohen_macaulay(ideal, field) == has_linear_resolution(alexander_dual(ideal), field)
