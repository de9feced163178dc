"""WMISP on prime U_5-free tournaments.

A prime U_5-free tournament is either T_n or splits into X, Y, Z with every
pairwise union transitive.  After orienting the split so every cyclic
triangle runs x -> y -> z -> x, a dynamic program over suffixes
X_i ∪ Y_j ∪ Z_k finds the optimum.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ..catalog import recognize_tn
from ..core import (
    Solution,
    Tournament,
    bits,
    denominator,
    find_cyclic_triangle,
    is_transitive_mask,
    scaled,
    solution,
    to_mask,
    topological_order,
    weight_map,
)
from ..errors import InvalidPartition, NoTriangle, NotInClass
from .w5free import solve_tn


@dataclass(frozen=True)
class XYZPartition:
    """Three classes, each listed sources first."""

    X: tuple[int, ...]
    Y: tuple[int, ...]
    Z: tuple[int, ...]

    def __iter__(self):
        return iter((self.X, self.Y, self.Z))


def _closes_triangle(T: Tournament, i: int, S: int) -> bool:
    """Does i form a cyclic triangle with two vertices of S?"""
    back = T.inn[i] & S
    for u in bits(T.out[i] & S):
        if T.out[u] & back:
            return True
    return False


def find_xyz_partition(T: Tournament) -> XYZPartition | None:
    """Grow a partition outward from a cyclic triangle.

    A vertex joins once it closes a cyclic triangle with the grown set; it
    goes to Z if it makes X ∪ Y cyclic, else to Y if it makes X ∪ Z cyclic,
    else to X.  Returns None when growth stalls or the result fails the
    partition invariants (as happens for T_n and for non-U_5-free input).
    """
    tri = find_cyclic_triangle(T)
    if tri is None:
        raise NoTriangle("tournament is transitive")
    x0, y0, z0 = tri
    X, Y, Z = 1 << x0, 1 << y0, 1 << z0
    S = X | Y | Z
    full = T.full_mask
    while S != full:
        grew = False
        for i in bits(full & ~S):
            if not _closes_triangle(T, i, S):
                continue
            b = 1 << i
            if not is_transitive_mask(T, X | Y | b):
                Z |= b
            elif not is_transitive_mask(T, X | Z | b):
                Y |= b
            else:
                X |= b
            S |= b
            grew = True
        if not grew:
            return None
    if T.has_arc(x0, z0):  # seed is x -> z -> y -> x
        Y, Z = Z, Y
    try:
        part = XYZPartition(*(tuple(topological_order(T, m)) for m in (X, Y, Z)))
        check_partition(T, part)
    except (InvalidPartition, ValueError):
        return None
    return part


def _threshold(T: Tournament, v: int, seq: tuple[int, ...]) -> int:
    """Index t with N+(v) ∩ seq == seq[t:]; raises if it is not a suffix."""
    t = len(seq)
    while t and T.has_arc(v, seq[t - 1]):
        t -= 1
    if any(T.has_arc(v, s) for s in seq[:t]):
        raise InvalidPartition(f"out-neighbours of {v} are not a suffix")
    return t


def check_partition(T: Tournament, part: XYZPartition) -> None:
    X, Y, Z = part
    if sorted(X + Y + Z) != list(range(T.n)):
        raise InvalidPartition("classes do not partition the vertex set")
    mx, my, mz = to_mask(X), to_mask(Y), to_mask(Z)
    for name, m in (("X∪Y", mx | my), ("Y∪Z", my | mz), ("Z∪X", mz | mx)):
        if not is_transitive_mask(T, m):
            raise InvalidPartition(f"{name} is not transitive")
    for cls in (X, Y, Z):
        for a, b in zip(cls, cls[1:]):
            if not T.has_arc(a, b):
                raise InvalidPartition("class not listed in topological order")
    for x in X:
        for z in bits(T.out[x] & mz):
            if T.out[z] & T.inn[x] & my:
                raise InvalidPartition("cyclic triangle oriented x -> z -> y")
    for v in X:
        _threshold(T, v, Y)
        _threshold(T, v, Z)
    for v in Y:
        _threshold(T, v, Z)


# choice tags
SKIP_X = 0
CASE3_ALL_Z = 1
CASE2 = 2  # CASE2 + m picks y_m


@dataclass
class DPTable:
    """opt[i][j][k] is the scaled optimum on X[i:] ∪ Y[j:] ∪ Z[k:] (0-based)."""

    part: XYZPartition
    opt: list
    choice: list
    den: int

    def value(self, i: int, j: int, k: int) -> Fraction:
        return Fraction(self.opt[i][j][k], self.den)


def xyz_dp_table(T: Tournament, w, part: XYZPartition) -> DPTable:
    w = weight_map(T.n, w)
    check_partition(T, part)
    X, Y, Z = part
    p, q, r = len(X), len(Y), len(Z)
    W = scaled(w)
    aY = [_threshold(T, x, Y) for x in X]
    aZ = [_threshold(T, x, Z) for x in X]
    bZ = [_threshold(T, y, Z) for y in Y]

    def prefix(seq):
        out = [0]
        for v in seq:
            out.append(out[-1] + W[v])
        return out

    PX, PY, PZ = prefix(X), prefix(Y), prefix(Z)
    suffix_x = [PX[p] - PX[i] for i in range(p + 1)]
    suffix_z = [PZ[r] - PZ[k] for k in range(r + 1)]

    opt = [[[0] * (r + 1) for _ in range(q + 1)] for _ in range(p + 1)]
    choice = [[[SKIP_X] * (r + 1) for _ in range(q + 1)] for _ in range(p + 1)]
    for j in range(q + 1):
        ys = PY[q] - PY[j]
        for k in range(r + 1):
            opt[p][j][k] = ys + suffix_z[k]

    for i in range(p - 1, -1, -1):
        wx, a, c = W[X[i]], aY[i], aZ[i]
        nxt, cur, ch = opt[i + 1], opt[i], choice[i]
        for k in range(r + 1):
            # Case 2 value for y_m, less the m-independent part w(x_i) + w(Y');
            # take suffix maxima so every j reads its best m in O(1).
            best_val = [0] * (q + 1)
            best_m = [-1] * (q + 1)
            run_v, run_m = -1, -1
            for m in range(q - 1, a - 1, -1):
                zend = max(k, bZ[m])
                g = PZ[zend] - PZ[k] + nxt[m][max(zend, c)]
                if g >= run_v:  # ties go to the smaller m
                    run_v, run_m = g, m
                best_val[m], best_m[m] = run_v, run_m
            for j in range(q + 1):
                m0 = j if j > a else a
                y_in = PY[m0] - PY[j]
                val, tag = nxt[j][k], SKIP_X
                s2 = suffix_x[i] + suffix_z[k] + y_in
                if s2 > val:
                    val, tag = s2, CASE3_ALL_Z
                if m0 < q:
                    s3 = wx + y_in + best_val[m0]
                    if s3 > val:
                        val, tag = s3, CASE2 + best_m[m0]
                cur[j][k] = val
                ch[j][k] = tag
    return DPTable(part, opt, choice, denominator(w))


def dp_vertices(T: Tournament, table: DPTable) -> list[int]:
    """Walk the recorded choices from the full instance."""
    X, Y, Z = table.part
    p = len(X)
    out = []
    i = j = k = 0
    while i < p:
        tag = table.choice[i][j][k]
        x = X[i]
        a = _threshold(T, x, Y)
        m0 = max(j, a)
        if tag == SKIP_X:
            i += 1
        elif tag == CASE3_ALL_Z:
            out += list(X[i:]) + list(Y[j:m0]) + list(Z[k:])
            return out
        else:
            m = tag - CASE2
            zend = max(k, _threshold(T, Y[m], Z))
            out += [x] + list(Y[j:m0]) + list(Z[k:zend])
            j, k = m, max(zend, _threshold(T, x, Z))
            i += 1
    return out + list(Y[j:]) + list(Z[k:])


def solve_xyz_dp(T: Tournament, w, part: XYZPartition) -> Solution:
    w = weight_map(T.n, w)
    table = xyz_dp_table(T, w, part)
    sol = solution(T, w, dp_vertices(T, table))
    assert sol.weight == table.value(0, 0, 0), "DP reconstruction lost weight"
    return sol


def solve_u5free_prime(T: Tournament, w=None) -> Solution:
    """Transitive, XYZ-partitionable, or T_n; anything else is out of class."""
    w = weight_map(T.n, w)
    if is_transitive_mask(T, T.full_mask):
        return solution(T, w, T.full_mask)
    part = find_xyz_partition(T)
    if part is not None:
        return solve_xyz_dp(T, w, part)
    label = recognize_tn(T)
    if label is None:
        raise NotInClass("prime tournament is neither T_n nor XYZ-partitionable; input is not prime U_5-free")
    return solve_tn(T, w, label)
