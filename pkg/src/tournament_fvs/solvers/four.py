"""WMISP on B_4-, C_4- and D_4-free tournaments.

K_4-free tournaments have at most 7 vertices and are left to the oracle.
"""

from __future__ import annotations

from ..core import Solution, Tournament, reverse, solution, strong_components, weight_map
from ..errors import NotInClass
from ..pattern import b4_free
from ._common import best_of


def solve_b4free(T: Tournament, w=None, verify: bool = True) -> Solution:
    """Best closed out-neighbourhood {v} ∪ N+(v).

    With no B_4 every out-neighbourhood is transitive, and the source of an
    optimal transitive set dominates the rest of it.
    """
    w = weight_map(T.n, w)
    if verify and not b4_free(T):
        raise NotInClass("tournament contains B_4")
    return best_of(T, w, (T.out[v] | 1 << v for v in range(T.n)))


def solve_d4free(T: Tournament, w=None, verify: bool = True) -> Solution:
    # reversal swaps B_4 and D_4 and keeps transitive sets transitive
    w = weight_map(T.n, w)
    try:
        s = solve_b4free(reverse(T), w, verify)
    except NotInClass:
        raise NotInClass("tournament contains D_4") from None
    return solution(T, w, s.vertices)


def solve_c4free(T: Tournament, w=None) -> Solution:
    """Keep every singleton component and the two heaviest vertices of each
    3-cycle component (ties to lower index)."""
    w = weight_map(T.n, w)
    keep = []
    for comp in strong_components(T):
        if len(comp) == 1:
            keep.extend(comp)
        elif len(comp) == 3:
            drop = min(comp, key=lambda v: (w[v], -v))
            keep.extend(v for v in comp if v != drop)
        else:
            raise NotInClass(f"strong component of size {len(comp)}; tournament contains C_4")
    return solution(T, w, keep)
