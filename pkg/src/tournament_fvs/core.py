"""Tournament model: adjacency, orderings, backedge graphs, transitivity.

Vertices are the integers ``0..n-1``.  Adjacency is stored as one Python int
per vertex whose set bits are that vertex's out-neighbours, so neighbourhood
intersections and subset tests are single big-int operations.

Vertex sets passed around internally are usually bitmasks as well; the public
functions accept any iterable of ints and return sorted tuples.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Iterator, Mapping, Sequence

from .errors import (
    BadOrdering,
    BadWeights,
    DiagonalArc,
    NotComplete,
    NotTransitive,
    OutOfRange,
)

WeightMap = tuple  # tuple[Fraction, ...], one entry per vertex


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def to_mask(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def prefer(a: int, b: int) -> bool:
    """Tie-break between two distinct vertex masks of equal weight.

    The winner is the set containing the smallest vertex of the symmetric
    difference.  For sets of equal size this is lexicographic order on the
    sorted vertex lists.
    """
    d = a ^ b
    return bool(a & d & -d)


@dataclass(frozen=True)
class Tournament:
    n: int
    out: tuple[int, ...]

    def __post_init__(self):
        if len(self.out) != self.n:
            raise ValueError("row count does not match n")

    @classmethod
    def from_arcs(cls, n: int, arcs: Iterable[tuple[int, int]]) -> "Tournament":
        rows = [0] * n
        for u, v in arcs:
            if not (0 <= u < n and 0 <= v < n):
                raise OutOfRange(f"arc ({u}, {v}) outside 0..{n - 1}")
            rows[u] |= 1 << v
        return validated(n, rows)

    @classmethod
    def from_order(cls, order: Sequence[int]) -> "Tournament":
        """Transitive tournament in which earlier vertices beat later ones."""
        n = len(order)
        rows = [0] * n
        for i, u in enumerate(order):
            for v in order[i + 1:]:
                rows[u] |= 1 << v
        return validated(n, rows)

    @cached_property
    def inn(self) -> tuple[int, ...]:
        """In-neighbour masks."""
        full = (1 << self.n) - 1
        return tuple(full & ~(row | (1 << v)) for v, row in enumerate(self.out))

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def has_arc(self, u: int, v: int) -> bool:
        return bool(self.out[u] >> v & 1)

    def out_degree(self, v: int, within: int | None = None) -> int:
        row = self.out[v] if within is None else self.out[v] & within
        return row.bit_count()

    def in_degree(self, v: int, within: int | None = None) -> int:
        row = self.inn[v] if within is None else self.inn[v] & within
        return row.bit_count()

    def out_neighbors(self, v: int) -> tuple[int, ...]:
        return tuple(bits(self.out[v]))

    def in_neighbors(self, v: int) -> tuple[int, ...]:
        return tuple(bits(self.inn[v]))

    def scores(self) -> list[int]:
        return [row.bit_count() for row in self.out]

    def arcs(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in bits(self.out[u])]

    def adjacency(self) -> list[list[bool]]:
        return [[self.has_arc(u, v) for v in range(self.n)] for u in range(self.n)]

    def relabel(self, perm: Sequence[int]) -> "Tournament":
        """Tournament with vertex ``v`` renamed to ``perm[v]``."""
        if sorted(perm) != list(range(self.n)):
            raise BadOrdering("relabelling is not a permutation")
        rows = [0] * self.n
        for u in range(self.n):
            for v in bits(self.out[u]):
                rows[perm[u]] |= 1 << perm[v]
        return Tournament(self.n, tuple(rows))

    def __repr__(self):
        return f"Tournament(n={self.n})"


def validated(n: int, rows: Sequence[int]) -> Tournament:
    full = (1 << n) - 1
    for v, row in enumerate(rows):
        if row >> v & 1:
            raise DiagonalArc(f"arc ({v}, {v})")
        if row & ~full:
            raise OutOfRange(f"row {v} has arcs outside 0..{n - 1}")
    for u in range(n):
        for v in range(u + 1, n):
            a, b = rows[u] >> v & 1, rows[v] >> u & 1
            if a == b:
                kind = "two arcs" if a else "no arc"
                raise NotComplete(f"pair ({u}, {v}) has {kind}")
    return Tournament(n, tuple(rows))


def from_adjacency(matrix: Sequence[Sequence[bool | int]]) -> Tournament:
    """Validated tournament from a square boolean (or 0/1) matrix."""
    n = len(matrix)
    rows = []
    for u, line in enumerate(matrix):
        if len(line) != n:
            raise NotComplete(f"row {u} has length {len(line)}, expected {n}")
        rows.append(to_mask(v for v, x in enumerate(line) if x))
    return validated(n, rows)


# -- weights -----------------------------------------------------------------

def weight_map(n: int, w: Sequence | Mapping | None = None) -> WeightMap:
    """Normalise ``w`` to a tuple of ``n`` nonnegative Fractions (default all 1)."""
    if w is None:
        return (Fraction(1),) * n
    if isinstance(w, Mapping):
        w = [w[v] for v in range(n)]
    if len(w) != n:
        raise BadWeights(f"expected {n} weights, got {len(w)}")
    out = tuple(Fraction(x) for x in w)
    if any(x < 0 for x in out):
        raise BadWeights("weights must be nonnegative")
    return out


def denominator(w: WeightMap) -> int:
    return math.lcm(*(x.denominator for x in w)) if w else 1


def scaled(w: WeightMap) -> list[int]:
    """Integer weights proportional to ``w`` (common denominator cleared)."""
    den = denominator(w)
    return [int(x * den) for x in w]


def mask_weight(w: WeightMap, mask: int) -> Fraction:
    return sum((w[v] for v in bits(mask)), Fraction(0))


@dataclass(frozen=True)
class Solution:
    """A transitive vertex set and its total weight."""

    vertices: tuple[int, ...]
    weight: Fraction

    @property
    def mask(self) -> int:
        return to_mask(self.vertices)


def solution(T: Tournament, w: WeightMap, vertices: Iterable[int] | int, check: bool = True) -> Solution:
    mask = vertices if isinstance(vertices, int) else to_mask(vertices)
    if check and not is_transitive_mask(T, mask):
        raise NotTransitive("solution set induces a cyclic triangle")
    return Solution(tuple(bits(mask)), mask_weight(w, mask))


# -- transitivity ------------------------------------------------------------

def is_transitive_mask(T: Tournament, mask: int) -> bool:
    # A tournament is transitive iff its score sequence is 0, 1, ..., k-1.
    seen = 0
    for v in bits(mask):
        d = 1 << (T.out[v] & mask).bit_count()
        if seen & d:
            return False
        seen |= d
    return True


def is_transitive(T: Tournament) -> bool:
    return is_transitive_mask(T, T.full_mask)


def find_cyclic_triangle(T: Tournament, mask: int | None = None) -> tuple[int, int, int] | None:
    """Lexicographically first cyclic triangle inside ``mask``, sorted."""
    if mask is None:
        mask = T.full_mask
    for a in bits(mask):
        later = mask >> (a + 1) << (a + 1)
        for b in bits(later):
            # c > b closes a 3-cycle with a, b
            later_b = later >> (b + 1) << (b + 1)
            if T.has_arc(a, b):
                cands = T.out[b] & T.inn[a] & later_b
            else:
                cands = T.inn[b] & T.out[a] & later_b
            if cands:
                return a, b, (cands & -cands).bit_length() - 1
    return None


def cyclic_triangles(T: Tournament) -> list[tuple[int, int, int]]:
    result = []
    for a in range(T.n):
        for b in range(a + 1, T.n):
            later = T.full_mask >> (b + 1) << (b + 1)
            if T.has_arc(a, b):
                cands = T.out[b] & T.inn[a] & later
            else:
                cands = T.inn[b] & T.out[a] & later
            result.extend((a, b, c) for c in bits(cands))
    return result


def topological_order(T: Tournament, mask: int | None = None) -> list[int]:
    """Vertices of a transitive (sub)tournament, sources first."""
    if mask is None:
        mask = T.full_mask
    if not is_transitive_mask(T, mask):
        raise NotTransitive("tournament contains a cyclic triangle")
    return sorted(bits(mask), key=lambda v: -(T.out[v] & mask).bit_count())


# -- orderings and backedges -------------------------------------------------

@dataclass(frozen=True)
class BackedgeGraph:
    ordering: tuple[int, ...]
    edges: frozenset[tuple[int, int]]  # each pair stored (min, max)


def check_ordering(n: int, ordering: Sequence[int]) -> tuple[int, ...]:
    ordering = tuple(ordering)
    if sorted(ordering) != list(range(n)):
        raise BadOrdering("ordering is not a permutation of the vertex set")
    return ordering


def backedge_graph(T: Tournament, ordering: Sequence[int]) -> BackedgeGraph:
    ordering = check_ordering(T.n, ordering)
    edges = set()
    for i, vi in enumerate(ordering):
        for vj in ordering[:i]:
            if T.has_arc(vi, vj):
                edges.add((min(vi, vj), max(vi, vj)))
    return BackedgeGraph(ordering, frozenset(edges))


def reverse(T: Tournament) -> Tournament:
    return Tournament(T.n, T.inn)


def induced(T: Tournament, vertices: Iterable[int]) -> tuple[Tournament, tuple[int, ...]]:
    """Subtournament on ``vertices`` and the map new index -> old index."""
    old = sorted(set(vertices))
    for v in old:
        if not 0 <= v < T.n:
            raise OutOfRange(f"vertex {v} outside 0..{T.n - 1}")
    rows = []
    for u in old:
        row = 0
        for i, v in enumerate(old):
            if T.out[u] >> v & 1:
                row |= 1 << i
        rows.append(row)
    return Tournament(len(old), tuple(rows)), tuple(old)


def strong_components(T: Tournament) -> list[tuple[int, ...]]:
    """Strong components, dominating component first.

    Sorting by score, a prefix of length k is a union of leading components
    exactly when its scores sum to C(k,2) + k(n-k) (it beats everything after).
    """
    order = sorted(range(T.n), key=lambda v: (-T.out_degree(v), v))
    comps, start, total = [], 0, 0
    for k, v in enumerate(order, 1):
        total += T.out_degree(v)
        if total == k * (k - 1) // 2 + k * (T.n - k):
            comps.append(tuple(sorted(order[start:k])))
            start = k
    return comps


def all_tournaments(n: int) -> Iterator[Tournament]:
    """Every labelled tournament on ``n`` vertices (2^C(n,2) of them)."""
    pairs = list(itertools.combinations(range(n), 2))
    for code in range(1 << len(pairs)):
        rows = [0] * n
        for bit, (u, v) in enumerate(pairs):
            if code >> bit & 1:
                rows[v] |= 1 << u
            else:
                rows[u] |= 1 << v
        yield Tournament(n, tuple(rows))
