"""Exact exponential-time WMISP oracles used to check the polynomial solvers.

Both return the maximum-weight transitive vertex set; among optimal sets the
one containing the smallest vertex of any pairwise difference wins.
"""

from __future__ import annotations

from ..core import Solution, Tournament, bits, is_transitive_mask, prefer, scaled, solution, weight_map
from ..errors import TooLarge

ORACLE_LIMIT = 22
ENUM_LIMIT = 16


def oracle_wmisp(T: Tournament, w=None, limit: int = ORACLE_LIMIT) -> Solution:
    """Branch and bound over include/exclude decisions in vertex order.

    Candidates are the undecided vertices that still fit with the chosen set.
    A node is cut when chosen + candidate weight cannot strictly beat the
    incumbent; because inclusion is explored first, the first optimum reached
    is also the tie-break winner, so equal-weight cuts are safe.
    """
    n = T.n
    if n > limit:
        raise TooLarge(f"oracle limited to {limit} vertices, got {n}")
    w = weight_map(n, w)
    W = scaled(w)
    best_w, best_m = -1, 0

    def rec(chosen: int, cand: int, cw: int):
        nonlocal best_w, best_m
        rest = 0
        for v in bits(cand):
            rest += W[v]
        if cw + rest <= best_w:
            return
        if is_transitive_mask(T, chosen | cand):
            best_w, best_m = cw + rest, chosen | cand
            return
        low = cand & -cand
        v = low.bit_length() - 1
        cand ^= low
        kill = 0
        for a in bits(chosen):
            if T.out[a] >> v & 1:
                kill |= T.out[v] & T.inn[a]
            else:
                kill |= T.out[a] & T.inn[v]
        rec(chosen | low, cand & ~kill, cw + W[v])
        rec(chosen, cand, cw)

    rec(0, T.full_mask, 0)
    return solution(T, w, best_m)


def enumerate_wmisp(T: Tournament, w=None, limit: int = ENUM_LIMIT) -> Solution:
    """Plain scan of all 2^n subsets."""
    n = T.n
    if n > limit:
        raise TooLarge(f"subset enumeration limited to {limit} vertices, got {n}")
    w = weight_map(n, w)
    W = scaled(w)
    best_w, best_m = -1, 0
    for m in range(1 << n):
        if not is_transitive_mask(T, m):
            continue
        s = sum(W[v] for v in bits(m))
        if s > best_w or (s == best_w and prefer(m, best_m)):
            best_w, best_m = s, m
    return solution(T, w, best_m)
