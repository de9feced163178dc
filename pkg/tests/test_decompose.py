import itertools
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings

from tournament_fvs import catalog
from tournament_fvs.core import Solution, induced, is_transitive_mask, to_mask, weight_map
from tournament_fvs.decompose import (
    expand,
    is_homogeneous,
    is_prime,
    minimal_homogeneous_set,
    prime_reduction,
    quotient,
    reduce_to_prime,
    substitute,
)
from tournament_fvs.errors import NotHomogeneous, TrivialSet
from tournament_fvs.generators import random_composite, random_weights
from tournament_fvs.solvers.oracle import oracle_wmisp

from conftest import tournaments

TRI = catalog.CYCLIC_TRIANGLE


def triangle_in_triangle():
    """Vertex 0 of a cyclic triangle replaced by another cyclic triangle."""
    T, blocks = substitute(TRI, [TRI, catalog.transitive(1), catalog.transitive(1)])
    return T, blocks


def test_trivial_sets_are_homogeneous():
    T = catalog.q7()
    assert all(is_homogeneous(T, [v]) for v in range(7))
    assert is_homogeneous(T, range(7))


def test_transitive_pairs():
    I3 = catalog.transitive(3)
    assert is_homogeneous(I3, [1, 2])
    assert minimal_homogeneous_set(I3) == (0, 1)


def test_t5_pairs_not_homogeneous():
    assert not any(is_homogeneous(catalog.T5, p) for p in itertools.combinations(range(5), 2))
    assert is_prime(catalog.T5)


def test_triangle_in_triangle_module():
    T, blocks = triangle_in_triangle()
    assert T.n == 5
    assert minimal_homogeneous_set(T) == tuple(blocks[0])


def test_q7_is_prime():
    assert minimal_homogeneous_set(catalog.q7()) is None


def test_small_tournaments_are_prime():
    assert is_prime(catalog.transitive(1)) and is_prime(catalog.transitive(2))


def test_quotient_examples():
    T, blocks = triangle_in_triangle()
    w = weight_map(5)
    inner = Solution((0, 1), Fraction(2))
    G, gw, rec, old = quotient(T, w, blocks[0], inner)
    assert G == TRI
    assert gw == (2, 1, 1)
    assert rec.module_set == (0, 1, 2) and rec.representative == 0
    assert old == (0, 3, 4)

    I3 = catalog.transitive(3)
    G, gw, _, _ = quotient(I3, weight_map(3), [1, 2], Solution((1, 2), Fraction(2)))
    assert gw == (1, 2)


def test_quotient_errors():
    T, _ = triangle_in_triangle()
    w = weight_map(5)
    with pytest.raises(TrivialSet):
        quotient(T, w, range(5), Solution((), Fraction(0)))
    with pytest.raises(TrivialSet):
        quotient(T, w, [0], Solution((), Fraction(0)))
    with pytest.raises(NotHomogeneous):
        quotient(T, w, [2, 3], Solution((), Fraction(0)))
    with pytest.raises(NotHomogeneous):
        quotient(T, w, [0, 1, 2], Solution((3,), Fraction(1)))


def test_reduce_to_prime_examples():
    calls = []

    def counting(G, gw):
        calls.append(G.n)
        return oracle_wmisp(G, gw)

    sol = reduce_to_prime(catalog.q7(), weight_map(7), counting)
    assert calls == [7] and sol.weight == 3

    T, _ = triangle_in_triangle()
    assert reduce_to_prime(T, weight_map(5), oracle_wmisp).weight == 3
    assert reduce_to_prime(catalog.transitive(6), weight_map(6), oracle_wmisp).weight == 6


def _brute_prime(T):
    for k in range(2, T.n):
        for X in itertools.combinations(range(T.n), k):
            if is_homogeneous(T, X):
                return False
    return True


@settings(max_examples=150)
@given(tournaments(max_n=7))
def test_primality_matches_exhaustive_check(T):
    assert is_prime(T) == _brute_prime(T)


@settings(max_examples=150)
@given(tournaments(min_n=3, max_n=8))
def test_minimal_set_is_minimum_and_prime(T):
    X = minimal_homogeneous_set(T)
    if X is None:
        return
    assert is_homogeneous(T, X) and 1 < len(X) < T.n
    for k in range(2, len(X)):
        assert not any(is_homogeneous(T, Y) for Y in itertools.combinations(range(T.n), k))
    assert is_prime(induced(T, X)[0])


def test_value_preservation_and_expansion():
    rng = random.Random(11)
    for _ in range(300):
        T = random_composite(rng, 3, 3)
        w = random_weights(T.n, rng)
        red = prime_reduction(T, w, oracle_wmisp)
        top = oracle_wmisp(red.final, red.final_weights)
        verts = expand(red, top.vertices)
        assert is_transitive_mask(T, to_mask(verts))
        assert sum((w[v] for v in verts), Fraction(0)) == top.weight == oracle_wmisp(T, w).weight
        assert all(s.representative >= T.n for s in red.steps)


def test_substitute_blocks_are_homogeneous():
    T, blocks = substitute(catalog.T5, [TRI, catalog.transitive(2), TRI, catalog.transitive(1), catalog.B4])
    assert T.n == 13
    for b in blocks:
        assert is_homogeneous(T, b)
