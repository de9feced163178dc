"""Top-level solve: pick a polynomial method when one applies.

Membership in the W_5- and U_5-free classes is certified piece by piece:
after modular reduction every prime piece must be recognized (transitive,
T_n, U_n, an XYZ partition that passes its invariant check, or a small piece
checked directly with the pattern search).  A recognized piece is free of the
pattern, and since W_5 and U_5 are prime, so is the whole tournament.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .. import catalog
from ..core import Solution, Tournament, is_transitive, solution, weight_map
from ..decompose import prime_reduction, expand
from ..errors import NotInClass, TooLarge, Unsupported
from ..pattern import b4_free, c4_free, d4_free, find_induced
from .four import solve_b4free, solve_c4free, solve_d4free
from .oracle import ORACLE_LIMIT, oracle_wmisp
from .u5free import solve_u5free_prime
from .w5free import solve_w5free_prime

METHODS = ("auto", "oracle", "w5free", "u5free", "b4free", "c4free", "d4free")


@dataclass
class Trace:
    """How a solution was obtained."""

    method: str
    quotient_steps: int = 0
    prime_sizes: list[int] = field(default_factory=list)

    def __str__(self):
        if not self.quotient_steps and not self.prime_sizes:
            return self.method
        sizes = ",".join(map(str, self.prime_sizes))
        return f"{self.method} steps={self.quotient_steps} primes={sizes}"


def _w5free_piece(T: Tournament, w) -> Solution:
    if T.n <= 7 and find_induced(T, catalog.W5) is not None:
        raise NotInClass("tournament contains W_5")
    return solve_w5free_prime(T, w)


def _u5free_piece(T: Tournament, w) -> Solution:
    if T.n <= 7 and find_induced(T, catalog.U5) is not None:
        raise NotInClass("tournament contains U_5")
    return solve_u5free_prime(T, w)


def _by_decomposition(T: Tournament, w, piece, name: str) -> tuple[Solution, Trace]:
    sizes: list[int] = []

    def counted(G, gw):
        sizes.append(G.n)
        return piece(G, gw)

    red = prime_reduction(T, w, counted)
    top = counted(red.final, red.final_weights)
    sol = solution(T, w, expand(red, top.vertices))
    if sol.weight != top.weight:
        raise AssertionError("expanded solution lost weight")
    return sol, Trace(name, len(red.steps), sizes)


def _class_solver(T: Tournament, w, method: str, verify: bool) -> tuple[Solution, Trace]:
    if method == "oracle":
        return oracle_wmisp(T, w), Trace("oracle")
    if method == "b4free":
        return solve_b4free(T, w, verify), Trace("b4free")
    if method == "d4free":
        return solve_d4free(T, w, verify), Trace("d4free")
    if method == "c4free":
        return solve_c4free(T, w), Trace("c4free")
    if method == "w5free":
        return _by_decomposition(T, w, _w5free_piece if verify else solve_w5free_prime, "w5free")
    if method == "u5free":
        return _by_decomposition(T, w, _u5free_piece if verify else solve_u5free_prime, "u5free")
    raise ValueError(f"unknown method {method!r}; expected one of {', '.join(METHODS)}")


def solve(T: Tournament, w=None, method: str = "auto", verify: bool = True) -> tuple[Solution, Trace]:
    """Maximum-weight transitive vertex set of T and the method that found it.

    ``auto`` tries, in order: transitive, B_4-, D_4-, C_4-free, W_5-free and
    U_5-free, then the oracle when n <= 22.  An explicit method raises
    NotInClass if T is outside its class; with ``verify=False`` the class
    checks are skipped and out-of-class input gives unspecified results.
    """
    w = weight_map(T.n, w)
    if method != "auto":
        return _class_solver(T, w, method, verify)
    if is_transitive(T):
        return solution(T, w, T.full_mask), Trace("transitive")
    if b4_free(T):
        return solve_b4free(T, w, verify=False), Trace("b4free")
    if d4_free(T):
        return solve_d4free(T, w, verify=False), Trace("d4free")
    if c4_free(T):
        return solve_c4free(T, w), Trace("c4free")
    for name in ("w5free", "u5free"):
        try:
            return _class_solver(T, w, name, verify=True)
        except NotInClass:
            pass
    try:
        return oracle_wmisp(T, w), Trace("oracle")
    except TooLarge:
        raise Unsupported(
            f"no polynomial class applies and n = {T.n} exceeds the oracle limit {ORACLE_LIMIT}"
        ) from None
