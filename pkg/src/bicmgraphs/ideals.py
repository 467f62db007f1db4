"""Squarefree monomial ideals, edge ideals, and Alexander duality.

A generator is a bit mask over an ordered variable universe (a tuple of
names), bit k meaning the k+1-st variable divides the monomial.  Generator
lists are kept inclusion-minimal and sorted by (degree, mask) so that ideal
equality is plain tuple equality.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import InputError
from .graphs import Graph, iter_bits, vertices_of


@dataclass(frozen=True)
class SquarefreeIdeal:
    universe: tuple[str, ...]
    gens: tuple[int, ...]

    def __post_init__(self):
        if len(set(self.universe)) != len(self.universe):
            raise InputError("variable names must be distinct")
        full = (1 << len(self.universe)) - 1
        prev = None
        for g in self.gens:
            if g == 0:
                raise InputError("empty generator")
            if g & ~full:
                raise InputError("generator uses variables outside the universe")
            key = (g.bit_count(), g)
            if prev is not None and key <= prev:
                raise InputError("generators not sorted by (degree, mask)")
            prev = key
        for a in self.gens:
            for b in self.gens:
                if a != b and a & b == a:
                    raise InputError("generators are not an antichain")

    @property
    def num_vars(self) -> int:
        return len(self.universe)

    def degrees(self) -> tuple[int, ...]:
        return tuple(g.bit_count() for g in self.gens)

    def monomial_str(self, mask: int) -> str:
        return "*".join(self.universe[k] for k in iter_bits(mask))

    def __str__(self):
        return "(" + ", ".join(self.monomial_str(g) for g in self.gens) + ")"


def minimalize_masks(masks) -> tuple[int, ...]:
    """Drop duplicates and anything containing another mask; canonical sort."""
    uniq = sorted(set(masks), key=lambda m: (m.bit_count(), m))
    out: list[int] = []
    for m in uniq:
        if not any(m & k == k for k in out):
            out.append(m)
    return tuple(out)


def make_ideal(universe, masks) -> SquarefreeIdeal:
    """Build an ideal from arbitrary generator masks, minimalizing first."""
    return SquarefreeIdeal(tuple(universe), minimalize_masks(masks))


def std_universe(n: int) -> tuple[str, ...]:
    return tuple(f"x{k}" for k in range(1, n + 1))


def edge_ideal(g: Graph) -> SquarefreeIdeal:
    """One degree-2 generator per edge, in variables x1..xn."""
    isolated = g.isolated_vertices()
    if isolated:
        raise InputError(f"graph has isolated vertices {list(isolated)}")
    masks = [(1 << (i - 1)) | (1 << (j - 1)) for i, j in g.edges()]
    return make_ideal(std_universe(g.n), masks)


def _minimal_transversals(gens: tuple[int, ...]) -> tuple[int, ...]:
    """All inclusion-minimal hitting sets of the generator supports.

    Branch on the variables of the first un-hit generator; prune any partial
    set that already contains a transversal found earlier, then post-filter
    for minimality.
    """
    found: list[int] = []

    def rec(cur: int) -> None:
        target = 0
        for g in gens:
            if cur & g == 0:
                target = g
                break
        else:
            if cur not in found:
                found.append(cur)
            return
        for b in iter_bits(target):
            nxt = cur | (1 << b)
            if any(nxt & f == f for f in found):
                continue
            rec(nxt)

    rec(0)
    return minimalize_masks(found)


@lru_cache(maxsize=8192)
def alexander_dual(ideal: SquarefreeIdeal) -> SquarefreeIdeal:
    """Generators are the minimal transversals of the generator supports."""
    if not ideal.gens:
        raise InputError("the zero ideal has no Alexander dual here")
    return SquarefreeIdeal(ideal.universe, _minimal_transversals(ideal.gens))


def minimal_primes(ideal: SquarefreeIdeal) -> list[int]:
    """Supports of the prime components, i.e. the dual's generator masks."""
    return list(alexander_dual(ideal).gens)


def squarefree_veronese(n: int, d: int) -> SquarefreeIdeal:
    """The ideal of all squarefree degree-d monomials in n variables."""
    if not 1 <= d <= n:
        raise InputError(f"degree {d} outside 1..{n}")
    masks = []

    def build(start: int, left: int, mask: int) -> None:
        if left == 0:
            masks.append(mask)
            return
        for k in range(start, n - left + 1):
            build(k + 1, left - 1, mask | (1 << k))

    build(0, d, 0)
    return make_ideal(std_universe(n), masks)


def equals(a: SquarefreeIdeal, b: SquarefreeIdeal) -> bool:
    return a.universe == b.universe and a.gens == b.gens


def substitute(ideal: SquarefreeIdeal, mapping: dict[str, str],
               universe: tuple[str, ...] | None = None) -> SquarefreeIdeal:
    """Apply a variable-to-variable map and re-minimalize.

    A map that collapses two variables of one generator would produce a
    square; that always signals a caller bug here, so it raises instead of
    silently reducing.
    """
    target = tuple(universe) if universe is not None else ideal.universe
    index = {name: k for k, name in enumerate(target)}
    images = []
    for g in ideal.gens:
        bits = set()
        seen = []
        for k in iter_bits(g):
            name = ideal.universe[k]
            image = mapping.get(name, name)
            if image not in index:
                raise InputError(f"image variable {image!r} is outside the target universe")
            if image in seen:
                raise InputError(
                    f"substitution collapses generator {ideal.monomial_str(g)} to a non-squarefree monomial")
            seen.append(image)
            bits.add(index[image])
        images.append(sum(1 << k for k in bits))
    return make_ideal(target, images)


def supports(ideal: SquarefreeIdeal) -> list[tuple[int, ...]]:
    """Generator supports as 1-based variable positions."""
    return [vertices_of(g) for g in ideal.gens]


def ideal_to_json_dict(ideal: SquarefreeIdeal) -> dict:
    return {
        "vars": list(ideal.universe),
        "gens": [[k + 1 for k in iter_bits(g)] for g in ideal.gens],
    }


def ideal_from_json_dict(obj) -> SquarefreeIdeal:
    if not isinstance(obj, dict) or "vars" not in obj or "gens" not in obj:
        raise InputError('ideal JSON needs "vars" and "gens" fields')
    universe = tuple(obj["vars"])
    masks = []
    for gen in obj["gens"]:
        mask = 0
        for k in gen:
            if not isinstance(k, int) or not 1 <= k <= len(universe):
                raise InputError(f"variable index {k!r} outside 1..{len(universe)}")
            mask |= 1 << (k - 1)
        masks.append(mask)
    return make_ideal(universe, masks)
