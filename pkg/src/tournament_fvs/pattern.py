"""Induced-subtournament search and 1-in/out-degeneracy."""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .catalog import is_isomorphic_small
from .core import Tournament, bits, induced, is_transitive_mask, strong_components, to_mask
from .errors import PatternTooLarge

MAX_PATTERN = 8


@dataclass(frozen=True)
class PatternHit:
    vertices: tuple[int, ...]
    mapping: dict[int, int]  # host vertex -> pattern vertex


def _score_profiles(H: Tournament) -> list[set[tuple[int, ...]]]:
    """For each k, the sorted score sequences of H's k-vertex subtournaments."""
    profiles = [set() for _ in range(H.n + 1)]
    for k in range(H.n + 1):
        for sub in itertools.combinations(range(H.n), k):
            m = to_mask(sub)
            profiles[k].add(tuple(sorted((H.out[v] & m).bit_count() for v in sub)))
    return profiles


def find_induced(T: Tournament, H: Tournament) -> PatternHit | None:
    """First induced copy of H in T, by lexicographic order of vertex subsets.

    A partial subset is abandoned as soon as its score sequence is not the
    score sequence of any subtournament of H.
    """
    if H.n > MAX_PATTERN:
        raise PatternTooLarge(f"pattern has {H.n} vertices, limit is {MAX_PATTERN}")
    k = H.n
    if k > T.n:
        return None
    if k == 0:
        return PatternHit((), {})
    profiles = _score_profiles(H)
    chosen: list[int] = []

    def search(start: int, mask: int) -> PatternHit | None:
        if len(chosen) == k:
            sub, old = induced(T, chosen)
            iso = is_isomorphic_small(sub, H)
            if iso is None:
                return None
            return PatternHit(tuple(chosen), {old[i]: iso[i] for i in range(k)})
        for v in range(start, T.n - (k - len(chosen)) + 1):
            m = mask | 1 << v
            prof = tuple(sorted((T.out[u] & m).bit_count() for u in bits(m)))
            if prof not in profiles[len(chosen) + 1]:
                continue
            chosen.append(v)
            hit = search(v + 1, m)
            chosen.pop()
            if hit is not None:
                return hit
        return None

    return search(0, 0)


def is_free(T: Tournament, H: Tournament) -> bool:
    return find_induced(T, H) is None


def is_1_out_degenerate(T: Tournament) -> tuple[bool, tuple[int, ...]]:
    """Peel a minimum-out-degree vertex until empty.

    Returns ``(True, ())`` if every step finds out-degree <= 1, else
    ``(False, core)`` with ``core`` a subtournament whose every vertex has
    out-degree >= 2 inside it.
    """
    alive = T.full_mask
    while alive:
        v = min(bits(alive), key=lambda u: ((T.out[u] & alive).bit_count(), u))
        if (T.out[v] & alive).bit_count() > 1:
            return False, tuple(bits(alive))
        alive &= ~(1 << v)
    return True, ()


def is_1_in_degenerate(T: Tournament) -> tuple[bool, tuple[int, ...]]:
    # same as the out-version on the reversal; vertex names are unchanged
    alive = T.full_mask
    while alive:
        v = min(bits(alive), key=lambda u: ((T.inn[u] & alive).bit_count(), u))
        if (T.inn[v] & alive).bit_count() > 1:
            return False, tuple(bits(alive))
        alive &= ~(1 << v)
    return True, ()


def b4_free(T: Tournament) -> bool:
    """B_4 is a source over a cyclic triangle: B_4-free iff every N+(v) is transitive."""
    return all(is_transitive_mask(T, T.out[v]) for v in range(T.n))


def d4_free(T: Tournament) -> bool:
    return all(is_transitive_mask(T, T.inn[v]) for v in range(T.n))


def c4_free(T: Tournament) -> bool:
    """C_4 is the only strong 4-tournament, so C_4-free iff no strong component exceeds 3."""
    return all(len(c) <= 3 for c in strong_components(T))
