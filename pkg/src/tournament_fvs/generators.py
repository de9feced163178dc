"""Random instance families for testing and benchmarking."""

from __future__ import annotations

import random
from fractions import Fraction

from . import catalog
from .core import Tournament, find_cyclic_triangle, induced, is_transitive_mask
from .decompose import minimal_homogeneous_set, substitute
from .solvers.u5free import XYZPartition, find_xyz_partition


def random_tournament(n: int, rng: random.Random) -> Tournament:
    rows = [0] * n
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < 0.5:
                rows[u] |= 1 << v
            else:
                rows[v] |= 1 << u
    return Tournament(n, tuple(rows))


def shuffled(T: Tournament, rng: random.Random) -> tuple[Tournament, list[int]]:
    perm = list(range(T.n))
    rng.shuffle(perm)
    return T.relabel(perm), perm


def random_weights(n: int, rng: random.Random, max_num: int = 9, max_den: int = 4) -> list[Fraction]:
    return [Fraction(rng.randint(0, max_num), rng.randint(1, max_den)) for _ in range(n)]


def _flip(rows: list[int], u: int, v: int) -> None:
    """Reverse the arc between u and v."""
    if rows[u] >> v & 1:
        rows[u] &= ~(1 << v)
        rows[v] |= 1 << u
    else:
        rows[v] &= ~(1 << u)
        rows[u] |= 1 << v


def random_b4free(n: int, rng: random.Random, max_rounds: int = 10_000) -> Tournament:
    """Random tournament repaired until every out-neighbourhood is transitive.

    Each repair turns one vertex of a cyclic triangle inside N+(v) against v.
    """
    while True:
        rows = list(random_tournament(n, rng).out)
        for _ in range(max_rounds):
            T = Tournament(n, tuple(rows))
            bad = [v for v in range(n) if not is_transitive_mask(T, T.out[v])]
            if not bad:
                return T
            v = rng.choice(bad)
            tri = find_cyclic_triangle(T, T.out[v])
            _flip(rows, v, rng.choice(tri))


def random_d4free(n: int, rng: random.Random) -> Tournament:
    T = random_b4free(n, rng)
    return Tournament(T.n, T.inn)


def random_c4free(n: int, rng: random.Random) -> Tournament:
    """Chain of blocks, each a single vertex or a cyclic triangle."""
    sizes = []
    left = n
    while left:
        s = 3 if left >= 3 and rng.random() < 0.5 else 1
        sizes.append(s)
        left -= s
    parts = [catalog.CYCLIC_TRIANGLE if s == 3 else catalog.transitive(1) for s in sizes]
    T, _ = substitute(catalog.transitive(len(parts)), parts)
    return shuffled(T, rng)[0]


def random_xyz(p: int, q: int, r: int, rng: random.Random, steps: int | None = None
               ) -> tuple[Tournament, XYZPartition]:
    """Random tournament with an XYZ partition whose cyclic triangles are all
    x -> y -> z -> x.

    Start from X => Y => Z => X and apply random adjacent swaps inside the
    three merged orders (X∪Y, Y∪Z, Z∪X), rejecting any swap that would
    create an x -> z -> y -> x triangle.  Vertices come out in random order.
    """
    n = p + q + r
    X = list(range(p))
    Y = list(range(p, p + q))
    Z = list(range(p + q, n))
    rows = [0] * n
    merges = [X + Y, Y + Z, Z + X]
    for seq in merges:
        for i, u in enumerate(seq):
            for v in seq[i + 1:]:
                rows[u] |= 1 << v
    klass = [0] * p + [1] * q + [2] * r
    mx = sum(1 << v for v in X)
    my = sum(1 << v for v in Y)
    mz = sum(1 << v for v in Z)
    inn = lambda v: ((1 << n) - 1) & ~rows[v] & ~(1 << v)  # noqa: E731
    if steps is None:
        steps = 4 * n * n
    for _ in range(steps):
        seq = merges[rng.randrange(3)]
        if len(seq) < 2:
            continue
        t = rng.randrange(len(seq) - 1)
        u, v = seq[t], seq[t + 1]
        if klass[u] == klass[v]:
            continue
        # after the swap v beats u; reject if that closes x -> z -> y -> x
        cu, cv = klass[u], klass[v]
        if (cv, cu) == (1, 0):  # y -> x: need x -> z -> y
            bad = rows[u] & mz & inn(v)
        elif (cv, cu) == (2, 1):  # z -> y: need y -> x -> z
            bad = rows[u] & mx & inn(v)
        elif (cv, cu) == (0, 2):  # x -> z: need z -> y -> x
            bad = rows[u] & my & inn(v)
        else:
            bad = 0
        if bad:
            continue
        _flip(rows, u, v)
        seq[t], seq[t + 1] = v, u
    T = Tournament(n, tuple(rows))
    T2, perm = shuffled(T, rng)
    part = XYZPartition(tuple(perm[v] for v in X), tuple(perm[v] for v in Y), tuple(perm[v] for v in Z))
    return T2, part


def prime_core(T: Tournament) -> Tournament:
    """Collapse minimal homogeneous sets to single vertices until prime.

    The result is an induced subtournament of T, so any hereditary property
    of T carries over.
    """
    while T.n > 2:
        X = minimal_homogeneous_set(T)
        if X is None:
            break
        drop = set(X[1:])
        T, _ = induced(T, [v for v in range(T.n) if v not in drop])
    return T


def random_prime_xyz(rng: random.Random, n_min: int = 6, n_max: int = 12,
                     max_tries: int = 10_000) -> tuple[Tournament, XYZPartition]:
    """Prime tournament admitting an XYZ partition, with n_min <= n <= n_max.

    Random XYZ instances are rarely prime, but their prime cores are prime,
    XYZ-form (the form is hereditary) and spread over a useful size range.
    """
    for _ in range(max_tries):
        size = rng.randint(n_max, 2 * n_max)
        p = rng.randint(1, size - 2)
        q = rng.randint(1, size - p - 1)
        T, _ = random_xyz(p, q, size - p - q, rng, steps=rng.randint(size, 8 * size))
        core = prime_core(T)
        if n_min <= core.n <= n_max:
            part = find_xyz_partition(core)
            if part is not None:
                return core, part
    raise RuntimeError("no prime XYZ instance found in the size window")


def staircase_xyz(n: int, rng: random.Random | None = None) -> tuple[Tournament, XYZPartition]:
    """Prime XYZ-form tournament on n >= 6 vertices.

    X beats all of Y, y_j beats z_t for t >= j, and z_k beats x_t for t >= k
    (shifted by one when |Z| = |X| + 1).  Vertices are shuffled when ``rng``
    is given.
    """
    if n < 6:
        raise ValueError("staircase needs n >= 6")
    m, extra = divmod(n, 3)
    if extra == 0:
        p, q, shift = m, m, 0
    elif extra == 1:
        p, q, shift = m, m, 1
    else:
        p, q, shift = m + 1, m, 0
    X = list(range(p))
    Y = list(range(p, p + q))
    Z = list(range(p + q, n))
    rows = [0] * n
    for cls in (X, Y, Z):
        for i, u in enumerate(cls):
            for v in cls[i + 1:]:
                rows[u] |= 1 << v
    for x in X:
        for y in Y:
            rows[x] |= 1 << y
    for j, y in enumerate(Y):
        for t, z in enumerate(Z):
            if t >= j:
                rows[y] |= 1 << z
            else:
                rows[z] |= 1 << y
    for k, z in enumerate(Z):
        for t, x in enumerate(X):
            if t >= max(0, k - shift):
                rows[z] |= 1 << x
            else:
                rows[x] |= 1 << z
    T = Tournament(n, tuple(rows))
    perm = list(range(n))
    if rng is not None:
        T, perm = shuffled(T, rng)
    return T, XYZPartition(*(tuple(perm[v] for v in cls) for cls in (X, Y, Z)))


W5FREE_PRIMES = [
    catalog.transitive(1), catalog.transitive(2), catalog.CYCLIC_TRIANGLE,
    catalog.T5, catalog.U5, catalog.q7_minus_v(), catalog.q7(),
    catalog.circulant(7), catalog.un(7), catalog.circulant(9), catalog.un(9),
]


def random_w5free_composite(rng: random.Random, n_min: int = 6, n_max: int = 12) -> Tournament:
    """Substitute W_5-free prime pieces into a W_5-free prime outer tournament."""
    while True:
        outer = rng.choice([P for P in W5FREE_PRIMES if 2 <= P.n <= n_max])
        parts, total = [], 0
        for i in range(outer.n):
            room = n_max - total - (outer.n - i - 1)
            fits = [P for P in W5FREE_PRIMES if P.n <= room and P.n <= 5]
            P = rng.choice(fits)
            parts.append(P)
            total += P.n
        if n_min <= total <= n_max:
            T, _ = substitute(outer, [shuffled(P, rng)[0] for P in parts])
            return shuffled(T, rng)[0]


def random_composite(rng: random.Random, max_outer: int = 4, max_inner: int = 4) -> Tournament:
    """Random small tournaments substituted into the vertices of another."""
    outer = random_tournament(rng.randint(1, max_outer), rng)
    parts = [random_tournament(rng.randint(1, max_inner), rng) for _ in range(outer.n)]
    T, _ = substitute(outer, parts)
    return shuffled(T, rng)[0]
