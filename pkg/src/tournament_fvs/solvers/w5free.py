"""WMISP on prime W_5-free tournaments: T_n, U_n and the small exceptions."""

from __future__ import annotations

from typing import Iterator, Sequence

from ..catalog import matches_circulant, matches_un, recognize_tn, recognize_un
from ..core import Solution, Tournament, is_transitive_mask, weight_map
from ..errors import BadLabeling, NotInClass
from ._common import best_of
from .four import solve_d4free
from .oracle import oracle_wmisp


def solve_tn(T: Tournament, w=None, label: Sequence[int] | None = None) -> Solution:
    """T_n is D_4-free, so the D_4-free solver applies directly."""
    w = weight_map(T.n, w)
    if label is None:
        label = recognize_tn(T)
        if label is None:
            raise NotInClass("tournament is not isomorphic to T_n")
    elif not matches_circulant(T, list(label)):
        raise BadLabeling("labelling does not realize T_n")
    return solve_d4free(T, w, verify=False)


def un_candidates(T: Tournament, label: Sequence[int], check: bool = True) -> Iterator[int]:
    """Candidate masks covering every maximal transitive set of U_n.

    With A = {v_h+1..v_n} and B = {v_1..v_h} (h = (n-1)/2):
    A and B themselves; one vertex of A plus all of B; and for each run
    v_i..v_j of A (i < j), that run plus B minus {v_k : i - n/2 < k < j - n/2}.
    """
    n = len(label)
    h = (n - 1) // 2
    masks = [1 << v for v in label]  # masks[t] is v_{t+1}
    B = 0
    for t in range(h):
        B |= masks[t]
    A = ((1 << n) - 1) & ~B if n else 0
    out = [A, B] + [masks[t] | B for t in range(h, n)]
    # prefix[t] = union of v_1..v_t
    prefix = [0]
    for m in masks:
        prefix.append(prefix[-1] | m)
    for i in range(h + 1, n + 1):
        for j in range(i + 1, n + 1):
            run = prefix[j] ^ prefix[i - 1]
            # 1-based k with 2i - n < 2k < 2j - n
            lo = max(1, (2 * i - n) // 2 + 1)
            hi = min(h, (2 * j - n - 1) // 2)
            cut = prefix[hi] ^ prefix[lo - 1] if hi >= lo else 0
            out.append(run | (B & ~cut))
    for m in out:
        if check:
            assert is_transitive_mask(T, m), "U_n candidate is not transitive"
        yield m


def solve_un(T: Tournament, w=None, label: Sequence[int] | None = None, check: bool = True) -> Solution:
    w = weight_map(T.n, w)
    if label is None:
        label = recognize_un(T)
        if label is None:
            raise NotInClass("tournament is not isomorphic to U_n")
    elif not matches_un(T, list(label)):
        raise BadLabeling("labelling does not realize U_n")
    return best_of(T, w, un_candidates(T, label, check))


def solve_w5free_prime(T: Tournament, w=None) -> Solution:
    """Prime W_5-free tournaments are I_1, I_2, Q_7 - v, Q_7, T_n or U_n.

    Up to 7 vertices the oracle is constant time; beyond that a regular
    tournament must be T_n and anything else U_n.
    """
    w = weight_map(T.n, w)
    if T.n <= 7:
        return oracle_wmisp(T, w)
    h = (T.n - 1) // 2
    if T.n % 2 and all(d == h for d in T.scores()):
        label = recognize_tn(T)
        if label is None:
            raise NotInClass("regular prime tournament is not T_n; input is not W_5-free")
        return solve_tn(T, w, label)
    label = recognize_un(T)
    if label is None:
        raise NotInClass("prime tournament is neither T_n nor U_n; input is not prime W_5-free")
    return solve_un(T, w, label)
