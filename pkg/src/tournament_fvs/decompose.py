"""Homogeneous sets, quotients, and reduction of WMISP to prime tournaments.

A homogeneous set X is one where every outside vertex either beats all of X
or loses to all of X.  Collapsing a minimal nontrivial X to a single vertex
weighted by X's internal optimum preserves the optimum, so repeatedly solving
prime pieces and quotienting solves the whole tournament.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable

from .core import (
    Solution,
    Tournament,
    WeightMap,
    bits,
    induced,
    is_transitive_mask,
    mask_weight,
    to_mask,
)
from .errors import NotHomogeneous, NotTransitive, TrivialSet

PrimeSolver = Callable[[Tournament, WeightMap], Solution]


def _splitters(T: Tournament, X: int) -> int:
    """Outside vertices with both an out- and an in-neighbour in X."""
    out = 0
    for w in bits(T.full_mask & ~X):
        hit = T.out[w] & X
        if hit and hit != X:
            out |= 1 << w
    return out


def is_homogeneous(T: Tournament, X: Iterable[int] | int) -> bool:
    X = X if isinstance(X, int) else to_mask(X)
    return _splitters(T, X) == 0


def closure(T: Tournament, X: int) -> int:
    """Smallest homogeneous set containing X."""
    while True:
        s = _splitters(T, X)
        if not s:
            return X
        X |= s


def minimal_homogeneous_set(T: Tournament) -> tuple[int, ...] | None:
    """A smallest nontrivial homogeneous set, or None if T is prime.

    Every nontrivial homogeneous set contains a pair, and the closure of a
    pair is the least homogeneous set containing it, so the minimum over all
    pair closures is a global minimum.  Ties go to the lexicographically
    smallest sorted vertex list.
    """
    n = T.n
    best, best_key = None, None
    full = T.full_mask
    for u in range(n):
        for v in range(u + 1, n):
            X = (1 << u) | (1 << v)
            limit = n - 1 if best is None else best.bit_count()
            while True:
                s = _splitters(T, X)
                if not s:
                    break
                X |= s
                if X.bit_count() > limit:
                    break
            if X == full or _splitters(T, X):
                continue
            key = (X.bit_count(), tuple(bits(X)))
            if best_key is None or key < best_key:
                best, best_key = X, key
    return None if best is None else tuple(bits(best))


def is_prime(T: Tournament) -> bool:
    return minimal_homogeneous_set(T) is None


@dataclass(frozen=True)
class QuotientRecord:
    """One collapse step, in the vertex names of the tournament it acted on."""

    module_set: tuple[int, ...]
    representative: int
    inner_solution: Solution


@dataclass(frozen=True)
class PrimeReduction:
    steps: tuple[QuotientRecord, ...]
    final: Tournament
    final_weights: WeightMap
    labels: tuple[int, ...]  # final vertex -> original vertex or representative id
    n: int  # original vertex count


def quotient(T: Tournament, w: WeightMap, X: Iterable[int], inner: Solution,
             representative: int | None = None):
    """Collapse homogeneous X to one vertex carrying ``inner.weight``.

    The representative takes the position of min(X); other vertices keep
    their relative order.  Returns ``(G/X, w', record, old_of_new)`` where
    ``old_of_new[i]`` is the vertex of T that vertex i of G/X stands for (the
    representative maps to min(X)).  ``inner`` is expressed in T's vertex
    names.
    """
    Xm = X if isinstance(X, int) else to_mask(X)
    k = Xm.bit_count()
    if k <= 1 or k == T.n:
        raise TrivialSet("quotient needs 1 < |X| < n")
    if _splitters(T, Xm):
        raise NotHomogeneous("X is not a homogeneous set")
    if inner.mask & ~Xm:
        raise NotHomogeneous("inner solution leaves X")
    rep = (Xm & -Xm).bit_length() - 1
    keep = [v for v in range(T.n) if v == rep or not (Xm >> v & 1)]
    G, old = induced(T, keep)
    new_w = tuple(inner.weight if v == rep else w[v] for v in old)
    record = QuotientRecord(tuple(bits(Xm)), rep if representative is None else representative, inner)
    return G, new_w, record, old


def prime_reduction(T: Tournament, w: WeightMap, prime_solver: PrimeSolver) -> PrimeReduction:
    """Collapse minimal homogeneous sets until the tournament is prime.

    Each module is solved with ``prime_solver`` (a minimal homogeneous set
    induces a prime subtournament).  Records use label ids: original vertices
    keep their index, each representative gets a fresh id ``n, n+1, ...``.
    """
    labels = list(range(T.n))
    steps = []
    G, gw = T, tuple(w)
    fresh = T.n
    while G.n > 2:
        X = minimal_homogeneous_set(G)
        if X is None:
            break
        sub, old = induced(G, X)
        inner = prime_solver(sub, tuple(gw[v] for v in old))
        inner_local = Solution(tuple(old[i] for i in inner.vertices), inner.weight)
        G, gw, _, kept = quotient(G, gw, X, inner_local)
        in_labels = Solution(tuple(labels[v] for v in inner_local.vertices), inner.weight)
        steps.append(QuotientRecord(tuple(labels[v] for v in X), fresh, in_labels))
        rep = X[0]
        labels = [fresh if v == rep else labels[v] for v in kept]
        fresh += 1
    return PrimeReduction(tuple(steps), G, gw, tuple(labels), T.n)


def expand(red: PrimeReduction, final_vertices: Iterable[int]) -> list[int]:
    """Original vertices represented by a vertex set of the final tournament."""
    by_rep = {s.representative: s for s in red.steps}
    out, stack = [], [red.labels[v] for v in final_vertices]
    while stack:
        x = stack.pop()
        if x < red.n:
            out.append(x)
        else:
            stack.extend(by_rep[x].inner_solution.vertices)
    return sorted(out)


def reduce_to_prime(T: Tournament, w: WeightMap, prime_solver: PrimeSolver) -> Solution:
    red = prime_reduction(T, w, prime_solver)
    top = prime_solver(red.final, red.final_weights)
    verts = expand(red, top.vertices)
    mask = to_mask(verts)
    if not is_transitive_mask(T, mask):
        raise NotTransitive("expanded solution is not transitive")
    weight = mask_weight(w, mask)
    assert weight == top.weight, (weight, top.weight)
    return Solution(tuple(verts), weight)


def substitute(outer: Tournament, parts: list[Tournament]) -> tuple[Tournament, list[list[int]]]:
    """Replace vertex i of ``outer`` by a copy of ``parts[i]``.

    Returns the composite and, for each outer vertex, the composite vertices
    of its block (blocks are numbered consecutively).
    """
    blocks, start = [], 0
    for P in parts:
        blocks.append(list(range(start, start + P.n)))
        start += P.n
    rows = [0] * start
    for i, P in enumerate(parts):
        for a in range(P.n):
            u = blocks[i][a]
            for b in bits(P.out[a]):
                rows[u] |= 1 << blocks[i][b]
            for j in bits(outer.out[i]):
                rows[u] |= to_mask(blocks[j])
    return Tournament(start, tuple(rows)), blocks
