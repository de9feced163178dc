"""Hard WMISP instances from vertex cover.

A graph G with every vertex doubled (v, v') and its edges kept on the
unprimed copies, read as a backedge graph under the order v_1, v_1', ...,
gives a tournament whose maximum transitive set has size 2n - τ(G).
Subdividing every edge into a path of three edges first makes the result
1-in- and 1-out-degenerate.  The 7-snake variant reorders the edge blocks by
endpoint; its snake-freeness is checked by search, never assumed.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Sequence

from . import catalog
from .core import Tournament, check_ordering
from .errors import BadParameter, FreenessViolation, IdentityViolation, TooLarge
from .pattern import find_induced, is_1_in_degenerate, is_1_out_degenerate
from .solvers.oracle import ORACLE_LIMIT, oracle_wmisp

VC_LIMIT = 24


@dataclass(frozen=True)
class GraphInstance:
    n: int
    edges: frozenset[tuple[int, int]]  # each stored (min, max)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "GraphInstance":
        seen = set()
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise BadParameter(f"edge ({u}, {v}) outside 0..{n - 1}")
            if u == v:
                raise BadParameter(f"loop at {u}")
            e = (min(u, v), max(u, v))
            if e in seen:
                raise BadParameter(f"duplicate edge {e}")
            seen.add(e)
        return cls(n, frozenset(seen))

    @property
    def m(self) -> int:
        return len(self.edges)

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)


class Gadget(Enum):
    PLAIN = "plain"
    THREE_PATH = "3path"
    SNAKE7 = "snake7"


@dataclass(frozen=True)
class Subdivision:
    """G with each edge e_t = {u < v} replaced by u - e_ta - e_tb - v."""

    graph: GraphInstance
    names: tuple[str, ...]
    edge_order: tuple[tuple[int, int], ...]  # e_t for t = 0..m-1


@dataclass(frozen=True)
class ReductionInstance:
    tournament: Tournament
    source: GraphInstance
    gadget: Gadget
    ordering: tuple[int, ...]
    vc_offset: int
    expanded: GraphInstance  # G after subdivision (G itself for PLAIN)
    names: tuple[str, ...]  # tournament vertex -> readable name


@dataclass(frozen=True)
class ReductionReport:
    mis: int
    offset: int
    tau: int
    in_degenerate: bool | None = None
    out_degenerate: bool | None = None
    snake7_free: bool | None = None
    snake_witness: tuple[int, ...] = ()

    @property
    def ok(self) -> bool:
        flags = (self.in_degenerate, self.out_degenerate, self.snake7_free)
        return self.mis == self.offset - self.tau and all(f is not False for f in flags)


def tournament_from_backedge_graph(B: GraphInstance, ordering: Sequence[int]) -> Tournament:
    """Forward arcs along ``ordering`` except on edges of B, which point back."""
    ordering = check_ordering(B.n, ordering)
    rows = [0] * B.n
    for i, u in enumerate(ordering):
        for v in ordering[i + 1:]:
            if (min(u, v), max(u, v)) in B.edges:
                rows[v] |= 1 << u
            else:
                rows[u] |= 1 << v
    return Tournament(B.n, tuple(rows))


def subdivide_3path(G: GraphInstance, edge_order: Sequence[tuple[int, int]] | None = None) -> Subdivision:
    """Vertices 0..n-1 keep their names; edge e_t gets n + 2t (a) and n + 2t + 1 (b)."""
    order = tuple(G.sorted_edges() if edge_order is None else edge_order)
    if set(order) != G.edges or len(order) != G.m:
        raise BadParameter("edge order must list every edge once")
    names = [f"v{v}" for v in range(G.n)]
    edges = []
    for t, (u, v) in enumerate(order):
        a, b = G.n + 2 * t, G.n + 2 * t + 1
        names += [f"e{t}a", f"e{t}b"]
        edges += [(u, a), (a, b), (b, v)]
    return Subdivision(GraphInstance.from_edges(G.n + 2 * G.m, edges), tuple(names), order)


def _doubled(H: GraphInstance, names: Sequence[str]) -> tuple[GraphInstance, tuple[str, ...]]:
    """H plus an isolated twin for every vertex; x becomes 2x and its twin 2x + 1."""
    edges = [(2 * u, 2 * v) for u, v in H.edges]
    twin_names = []
    for s in names:
        twin_names += [s, s + "'"]
    return GraphInstance.from_edges(2 * H.n, edges), tuple(twin_names)


def snake7_edge_order(G: GraphInstance) -> list[tuple[int, int]]:
    """Edge blocks ordered by smaller endpoint descending, then larger endpoint descending."""
    return sorted(G.edges, reverse=True)


def build_misp_instance(G: GraphInstance, gadget: Gadget | str = Gadget.PLAIN) -> ReductionInstance:
    gadget = Gadget(gadget)
    if gadget is Gadget.PLAIN:
        expanded, names = G, tuple(f"v{v}" for v in range(G.n))
    else:
        order = snake7_edge_order(G) if gadget is Gadget.SNAKE7 else None
        sub = subdivide_3path(G, order)
        expanded, names = sub.graph, sub.names
    plus, plus_names = _doubled(expanded, names)
    # vertex ids already follow the enumeration v_1, v_1', ..., e_ta, e_ta', e_tb, e_tb'
    ordering = tuple(range(plus.n))
    T = tournament_from_backedge_graph(plus, ordering)
    return ReductionInstance(T, G, gadget, ordering, plus.n, expanded, plus_names)


def brute_force_vertex_cover(G: GraphInstance, limit: int = VC_LIMIT) -> tuple[int, tuple[int, ...]]:
    """Minimum vertex cover by branching on an uncovered edge."""
    if G.n > limit:
        raise TooLarge(f"vertex cover oracle limited to {limit} vertices, got {G.n}")
    edges = G.sorted_edges()
    best = [G.n + 1, ()]

    def rec(cover: frozenset[int]):
        if len(cover) >= best[0]:
            return
        for u, v in edges:
            if u not in cover and v not in cover:
                rec(cover | {u})
                rec(cover | {v})
                return
        best[0], best[1] = len(cover), tuple(sorted(cover))

    rec(frozenset())
    return best[0], best[1]


def verify_reduction(r: ReductionInstance, oracle_limit: int = ORACLE_LIMIT,
                     strict: bool = True) -> ReductionReport:
    """Recompute both sides of MIS = offset - τ and the gadget's freeness claims.

    With ``strict`` a failed check raises; otherwise the report carries it.
    """
    if r.tournament.n > oracle_limit:
        raise TooLarge(f"instance has {r.tournament.n} vertices, oracle limit is {oracle_limit}")
    mis = len(oracle_wmisp(r.tournament, limit=oracle_limit).vertices)
    tau, _ = brute_force_vertex_cover(r.expanded)
    report = ReductionReport(mis, r.vc_offset, tau)
    if r.gadget is not Gadget.PLAIN:
        hit = find_induced(r.tournament, catalog.snake(7)) if r.gadget is Gadget.SNAKE7 else None
        report = ReductionReport(
            mis, r.vc_offset, tau,
            in_degenerate=is_1_in_degenerate(r.tournament)[0],
            out_degenerate=is_1_out_degenerate(r.tournament)[0],
            snake7_free=None if r.gadget is not Gadget.SNAKE7 else hit is None,
            snake_witness=() if hit is None else hit.vertices,
        )
    if not strict:
        return report
    if report.mis != report.offset - report.tau:
        raise IdentityViolation(f"mis={mis} but offset - tau = {r.vc_offset - tau}")
    if report.in_degenerate is False or report.out_degenerate is False:
        raise FreenessViolation("instance is not 1-in- and 1-out-degenerate")
    if report.snake7_free is False:
        raise FreenessViolation("instance contains a 7-snake")
    return report


def all_graphs(n: int) -> Iterable[GraphInstance]:
    """Every labelled simple graph on n vertices."""
    pairs = list(itertools.combinations(range(n), 2))
    for code in range(1 << len(pairs)):
        yield GraphInstance(n, frozenset(p for i, p in enumerate(pairs) if code >> i & 1))


def random_graph(n: int, rng: random.Random, p: float = 0.5) -> GraphInstance:
    return GraphInstance(n, frozenset(e for e in itertools.combinations(range(n), 2) if rng.random() < p))
