from __future__ import annotations

from typing import Iterable

from ..core import Solution, Tournament, bits, prefer, scaled, solution


def best_of(T: Tournament, w, masks: Iterable[int]) -> Solution:
    """Heaviest candidate mask, ties to the preferred set."""
    W = scaled(w)
    best_w, best_m = -1, 0
    for m in masks:
        s = sum(W[v] for v in bits(m))
        if s > best_w or (s == best_w and prefer(m, best_m)):
            best_w, best_m = s, m
    return solution(T, w, best_m)


def empty(T: Tournament) -> Solution:
    return solution(T, (), 0)
