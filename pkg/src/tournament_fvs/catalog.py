"""Named tournaments: I_n, T_n, U_n, W_n, Q_7, Q_7-v, the four 4-vertex
tournaments and k-snakes, plus recognizers for T_n and U_n and a small
isomorphism search.

Labels follow the usual 1-based names shifted down by one: ``v_1`` is vertex 0.
W_n puts the hub ``v`` at 0 and ``w_i`` at ``i``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .core import Tournament, bits, validated
from .errors import BadParameter, TooLarge

MAX_ISO = 12


@dataclass(frozen=True)
class PatternKind:
    name: str  # In, Tn, Un, Wn, Q7, Q7MinusV, K4, B4, C4, D4, Snake
    param: int | None = None

    def __str__(self):
        return self.name if self.param is None else f"{self.name}({self.param})"


def _check_odd(n: int, name: str):
    if not isinstance(n, int) or n < 1 or n % 2 == 0:
        raise BadParameter(f"{name} needs odd n >= 1, got {n!r}")


def transitive(n: int) -> Tournament:
    if n < 0:
        raise BadParameter(f"I_n needs n >= 0, got {n}")
    return Tournament.from_order(range(n))


def circulant(n: int) -> Tournament:
    """T_n: v_i -> v_j iff j - i is 1..(n-1)/2 mod n."""
    _check_odd(n, "T_n")
    h = (n - 1) // 2
    return Tournament.from_arcs(n, ((i, (i + d) % n) for i in range(n) for d in range(1, h + 1)))


def un(n: int) -> Tournament:
    """U_n: T_n with every arc inside {v_1..v_{(n-1)/2}} reversed."""
    _check_odd(n, "U_n")
    h = (n - 1) // 2
    rows = list(circulant(n).out)
    for i in range(h):
        for j in range(i + 1, h):
            # T_n has v_i -> v_j for i < j < h; flip it
            rows[i] &= ~(1 << j)
            rows[j] |= 1 << i
    return validated(n, rows)


def wn(n: int) -> Tournament:
    """W_n: w_1..w_{n-1} transitive, even w's beat the hub, hub beats odd w's."""
    _check_odd(n, "W_n")
    arcs = [(i, j) for i in range(1, n) for j in range(i + 1, n)]
    arcs += [(i, 0) if i % 2 == 0 else (0, i) for i in range(1, n)]
    return Tournament.from_arcs(n, arcs)


def q7() -> Tournament:
    return Tournament.from_arcs(7, ((i, (i + d) % 7) for i in range(7) for d in (1, 2, 4)))


def q7_minus_v() -> Tournament:
    from .core import induced
    return induced(q7(), range(1, 7))[0]


# Figure arcs, 1-based as drawn.
_FOUR = {
    "K4": [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)],
    "B4": [(1, 2), (3, 1), (4, 1), (2, 3), (4, 2), (4, 3)],
    "C4": [(1, 2), (3, 1), (1, 4), (2, 3), (4, 2), (3, 4)],
    "D4": [(1, 2), (3, 1), (1, 4), (2, 3), (2, 4), (3, 4)],
}


def snake(k: int) -> Tournament:
    """k-snake: forward order except each consecutive pair is reversed."""
    if not isinstance(k, int) or k < 1:
        raise BadParameter(f"snake needs k >= 1, got {k!r}")
    arcs = [(j, i) if j == i + 1 else (i, j) for i in range(k) for j in range(i + 1, k)]
    return Tournament.from_arcs(k, arcs)


def make(kind: PatternKind | str, param: int | None = None) -> Tournament:
    if isinstance(kind, PatternKind):
        kind, param = kind.name, kind.param
    if kind == "In":
        return transitive(param)
    if kind == "Tn":
        return circulant(param)
    if kind == "Un":
        return un(param)
    if kind == "Wn":
        return wn(param)
    if kind == "Q7":
        return q7()
    if kind == "Q7MinusV":
        return q7_minus_v()
    if kind in _FOUR:
        return Tournament.from_arcs(4, ((u - 1, v - 1) for u, v in _FOUR[kind]))
    if kind == "Snake":
        return snake(param)
    raise BadParameter(f"unknown pattern kind {kind!r}")


CYCLIC_TRIANGLE = circulant(3)
K4, B4, C4, D4 = (make(k) for k in ("K4", "B4", "C4", "D4"))
T5, U5, W5 = circulant(5), un(5), wn(5)


# -- recognizers -------------------------------------------------------------

def matches_circulant(T: Tournament, label: list[int]) -> bool:
    """``label[i]`` is the vertex playing v_{i+1}."""
    return _matches(T, label, circulant(T.n))


def matches_un(T: Tournament, label: list[int]) -> bool:
    return _matches(T, label, un(T.n))


def _matches(T: Tournament, label, ref: Tournament) -> bool:
    if sorted(label) != list(range(T.n)):
        return False
    return all(T.has_arc(label[i], label[j]) == ref.has_arc(i, j)
               for i in range(T.n) for j in range(T.n) if i != j)


def recognize_tn(T: Tournament) -> list[int] | None:
    """Labelling ``label`` (label[i] = v_{i+1}) realizing T ≅ T_n, or None.

    In T_n the out-neighbourhood of v_i is the transitive run v_{i+1}..v_{i+h}
    whose source is v_{i+1}, so fixing v_1 forces every later label.  T_n is
    vertex-transitive, so v_1 may be any vertex.
    """
    n = T.n
    if n % 2 == 0:
        return None
    h = (n - 1) // 2
    if any(d != h for d in T.scores()):
        return None
    if n == 1:
        return [0]
    label, cur = [0], 0
    for _ in range(n - 1):
        nbrs = T.out[cur]
        # the source of N+(cur) beats the other h-1 out-neighbours
        nxt = [v for v in bits(nbrs) if (T.out[v] & nbrs).bit_count() == h - 1]
        if len(nxt) != 1:
            return None
        cur = nxt[0]
        label.append(cur)
    return label if matches_circulant(T, label) else None


def recognize_un(T: Tournament) -> list[int] | None:
    """Labelling realizing T ≅ U_n, or None.

    For m >= 7 the current U_m has a unique in-degree-1 vertex v_{(m-1)/2}
    whose in-neighbour is v_m; removing both leaves U_{m-2} with the remaining
    labels shifted past position (m-1)/2.  U_5 is labelled by brute force.
    """
    n = T.n
    if n % 2 == 0:
        return None
    if n <= 3:
        return recognize_tn(T)  # U_1 = T_1, U_3 = T_3
    alive = T.full_mask
    peeled = []  # (v_{(m-1)/2}, v_m) per step, outermost first
    while alive.bit_count() > 5:
        ones = [v for v in bits(alive) if (T.inn[v] & alive).bit_count() == 1]
        if len(ones) != 1:
            return None
        a = ones[0]
        b = (T.inn[a] & alive).bit_length() - 1
        peeled.append((a, b))
        alive &= ~((1 << a) | (1 << b))
    label = _label_u5(T, list(bits(alive)))
    if label is None:
        return None
    for a, b in reversed(peeled):
        m = len(label) + 2
        pos = (m - 1) // 2 - 1  # 0-based slot of v_{(m-1)/2}
        label = label[:pos] + [a] + label[pos:] + [b]
    return label if matches_un(T, label) else None


_U5 = un(5)


def _label_u5(T: Tournament, verts: list[int]) -> list[int] | None:
    for perm in itertools.permutations(verts):
        if all(T.has_arc(perm[i], perm[j]) == _U5.has_arc(i, j)
               for i in range(5) for j in range(5) if i != j):
            return list(perm)
    return None


def is_isomorphic_small(T: Tournament, H: Tournament) -> dict[int, int] | None:
    """Arc-preserving bijection V(T) -> V(H), or None.  Both sides <= 12 vertices."""
    if T.n != H.n:
        return None
    n = T.n
    if n > MAX_ISO:
        raise TooLarge(f"isomorphism search limited to {MAX_ISO} vertices")
    st, sh = T.scores(), H.scores()
    if sorted(st) != sorted(sh):
        return None
    # refine by (score, sorted scores of out-neighbours)
    sig_t = [(st[v], tuple(sorted(st[u] for u in bits(T.out[v])))) for v in range(n)]
    sig_h = [(sh[v], tuple(sorted(sh[u] for u in bits(H.out[v])))) for v in range(n)]
    if sorted(sig_t) != sorted(sig_h):
        return None
    order = sorted(range(n), key=lambda v: sum(s == sig_t[v] for s in sig_t))
    cands = [[x for x in range(n) if sig_h[x] == sig_t[v]] for v in order]
    image = [-1] * n
    used = 0

    def extend(i: int) -> bool:
        nonlocal used
        if i == n:
            return True
        v = order[i]
        for x in cands[i]:
            if used >> x & 1:
                continue
            if all(T.has_arc(v, order[k]) == H.has_arc(x, image[order[k]]) for k in range(i)):
                image[v] = x
                used |= 1 << x
                if extend(i + 1):
                    return True
                used &= ~(1 << x)
        image[v] = -1
        return False

    return {v: image[v] for v in range(n)} if extend(0) else None


def canonical_form(T: Tournament) -> tuple[int, ...]:
    """Isomorphism-invariant code for small tournaments.

    Vertices are split into cells by an iterated degree refinement; the code
    is the lexicographically least adjacency-row tuple over all orderings that
    respect the cell order.
    """
    n = T.n
    colour = T.scores()
    while True:
        new = [(colour[v], tuple(sorted(colour[u] for u in bits(T.out[v])))) for v in range(n)]
        ranks = {c: i for i, c in enumerate(sorted(set(new)))}
        new = [ranks[c] for c in new]
        if len(set(new)) == len(set(colour)):
            colour = new
            break
        colour = new
    cells = [sorted(v for v in range(n) if colour[v] == c) for c in sorted(set(colour))]
    best = None
    for parts in itertools.product(*(itertools.permutations(c) for c in cells)):
        order = [v for p in parts for v in p]
        pos = {v: i for i, v in enumerate(order)}
        code = tuple(sum(1 << pos[u] for u in bits(T.out[v])) for v in order)
        if best is None or code < best:
            best = code
    return (n,) + (best or ())
