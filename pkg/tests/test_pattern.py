import itertools
import random

import pytest
from hypothesis import given, settings

from tournament_fvs import catalog
from tournament_fvs.catalog import is_isomorphic_small
from tournament_fvs.core import all_tournaments, induced, reverse, to_mask
from tournament_fvs.errors import PatternTooLarge
from tournament_fvs.generators import random_tournament
from tournament_fvs.pattern import (
    b4_free,
    c4_free,
    d4_free,
    find_induced,
    is_1_in_degenerate,
    is_1_out_degenerate,
    is_free,
)

from conftest import tournaments


def test_identity_hit():
    hit = find_induced(catalog.W5, catalog.W5)
    assert hit.vertices == (0, 1, 2, 3, 4)


def test_named_family_freeness_examples():
    assert find_induced(catalog.circulant(9), catalog.D4) is None
    assert find_induced(catalog.circulant(7), catalog.U5) is None


def test_first_cyclic_triangle_in_t5():
    assert find_induced(catalog.T5, catalog.CYCLIC_TRIANGLE).vertices == (0, 1, 3)


def test_pattern_larger_than_host():
    assert is_free(catalog.transitive(4), catalog.T5)


def test_pattern_size_limit():
    with pytest.raises(PatternTooLarge):
        find_induced(catalog.circulant(11), catalog.circulant(9))


def test_degeneracy_examples():
    assert is_1_out_degenerate(catalog.snake(7))[0]
    assert is_1_in_degenerate(catalog.snake(7))[0]
    assert is_1_out_degenerate(catalog.transitive(6)) == (True, ())
    assert is_1_out_degenerate(catalog.T5) == (False, (0, 1, 2, 3, 4))
    assert not is_1_in_degenerate(catalog.T5)[0]
    assert is_1_in_degenerate(catalog.CYCLIC_TRIANGLE)[0]


def _brute_free(T, H):
    for sub in itertools.combinations(range(T.n), H.n):
        if is_isomorphic_small(induced(T, sub)[0], H) is not None:
            return False
    return True


@pytest.mark.parametrize("H", [catalog.K4, catalog.B4, catalog.C4, catalog.D4], ids=["K4", "B4", "C4", "D4"])
def test_find_induced_matches_brute_force(H):
    rng = random.Random(3)
    for _ in range(150):
        T = random_tournament(rng.randint(4, 7), rng)
        assert is_free(T, H) == _brute_free(T, H)


def test_structural_four_vertex_checks_exhaustive():
    for T in all_tournaments(5):
        assert b4_free(T) == is_free(T, catalog.B4)
        assert d4_free(T) == is_free(T, catalog.D4)
        assert c4_free(T) == is_free(T, catalog.C4)


@settings(max_examples=60)
@given(tournaments(min_n=4, max_n=9))
def test_structural_four_vertex_checks_random(T):
    assert b4_free(T) == is_free(T, catalog.B4)
    assert d4_free(T) == is_free(T, catalog.D4)
    assert c4_free(T) == is_free(T, catalog.C4)


@settings(max_examples=60)
@given(tournaments(max_n=7))
def test_reversal_duality(T):
    for H in (catalog.B4, catalog.C4, catalog.T5, catalog.U5, catalog.W5):
        assert is_free(T, H) == is_free(reverse(T), reverse(H))


@given(tournaments(max_n=9))
def test_degeneracy_reversal(T):
    assert is_1_out_degenerate(T)[0] == is_1_in_degenerate(reverse(T))[0]


def _brute_out_degenerate(T):
    for k in range(1, T.n + 1):
        for sub in itertools.combinations(range(T.n), k):
            m = to_mask(sub)
            if min((T.out[v] & m).bit_count() for v in sub) > 1:
                return False
    return True


def test_peeling_matches_definition():
    rng = random.Random(4)
    for _ in range(1000):
        T = random_tournament(rng.randint(1, 6), rng)
        ok, core = is_1_out_degenerate(T)
        assert ok == _brute_out_degenerate(T)
        if not ok:
            m = to_mask(core)
            assert min((T.out[v] & m).bit_count() for v in core) >= 2


@settings(max_examples=80)
@given(tournaments(min_n=5, max_n=9))
def test_hits_reverify(T):
    for H in (catalog.CYCLIC_TRIANGLE, catalog.B4, catalog.T5, catalog.U5):
        hit = find_induced(T, H)
        if hit is not None:
            sub, old = induced(T, hit.vertices)
            assert is_isomorphic_small(sub, H) is not None
            assert all(T.has_arc(u, v) == H.has_arc(hit.mapping[u], hit.mapping[v])
                       for u in hit.vertices for v in hit.vertices if u != v)
