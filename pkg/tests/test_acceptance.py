"""Acceptance criteria, one test per criterion.

Each test prints a single PASS/FAIL line (also collected into the terminal
summary) and then asserts, so a failing criterion fails the run.
"""

import math
import random
import time

import pytest

from tournament_fvs import catalog
from tournament_fvs.catalog import canonical_form, is_isomorphic_small
from tournament_fvs.core import Tournament, all_tournaments, is_transitive_mask
from tournament_fvs.decompose import is_prime, reduce_to_prime
from tournament_fvs.generators import (
    random_b4free,
    random_c4free,
    random_composite,
    random_d4free,
    random_prime_xyz,
    random_w5free_composite,
    random_weights,
    random_xyz,
    shuffled,
    staircase_xyz,
)
from tournament_fvs.pattern import find_induced, is_1_in_degenerate, is_1_out_degenerate
from tournament_fvs.reductions import (
    all_graphs,
    brute_force_vertex_cover,
    build_misp_instance,
    random_graph,
)
from tournament_fvs.solvers import (
    enumerate_wmisp,
    oracle_wmisp,
    solve,
    solve_b4free,
    solve_c4free,
    solve_d4free,
    solve_tn,
    solve_u5free_prime,
    solve_un,
)

from conftest import ACCEPTANCE_LINES

pytestmark = pytest.mark.acceptance


def report(number, name, ok, detail):
    line = f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {name} -- {detail}"
    ACCEPTANCE_LINES.append(line)
    print(line)
    return ok


def test_1_exhaustive_five_vertex():
    rng = random.Random(101)
    checked = mismatches = 0
    start = time.perf_counter()
    for T in all_tournaments(5):
        for w in [None] + [random_weights(5, rng) for _ in range(3)]:
            got, _ = solve(T, w)
            want = enumerate_wmisp(T, w)
            checked += 1
            if got.weight != want.weight or not is_transitive_mask(T, got.mask):
                mismatches += 1
    elapsed = time.perf_counter() - start
    ok = mismatches == 0 and checked == 4096 and elapsed < 60
    assert report(1, "exhaustive 5-vertex oracle equivalence", ok,
                  f"{checked} solves, {mismatches} mismatches, {elapsed:.1f}s")


def _class_cases(rng):
    """Per class, a maker returning (tournament, solver) with 6 <= n <= 12."""

    def b4():
        T = random_b4free(rng.randint(6, 12), rng)
        return T, solve_b4free

    def c4():
        return random_c4free(rng.randint(6, 12), rng), solve_c4free

    def d4():
        return random_d4free(rng.randint(6, 12), rng), solve_d4free

    def tn():
        return shuffled(catalog.circulant(rng.choice([7, 9, 11])), rng)[0], solve_tn

    def un():
        return shuffled(catalog.un(rng.choice([7, 9, 11])), rng)[0], solve_un

    def xyz():
        if rng.random() < 0.5:
            T, _ = random_prime_xyz(rng, 6, 12)
            return T, solve_u5free_prime
        n = rng.randint(6, 12)
        p = rng.randint(1, n - 2)
        q = rng.randint(1, n - p - 1)
        T, _ = random_xyz(p, q, n - p - q, rng)
        return T, lambda T, w: solve(T, w, method="u5free")[0]

    def w5():
        T = random_w5free_composite(rng, 6, 12)
        return T, lambda T, w: solve(T, w, method="w5free")[0]

    return {"B4-free": b4, "C4-free": c4, "D4-free": d4, "T_n": tn, "U_n": un,
            "XYZ-form": xyz, "W5-free composite": w5}


def test_2_class_targeted():
    rng = random.Random(202)
    per_class = 1430
    cases = _class_cases(rng)
    counts, bad = {}, []
    start = time.perf_counter()
    for name, make_case in cases.items():
        for _ in range(per_class):
            T, solver = make_case()
            w = random_weights(T.n, rng) if rng.random() < 0.8 else None
            got = solver(T, w)
            want = oracle_wmisp(T, w)
            if got.weight != want.weight or not is_transitive_mask(T, got.mask):
                bad.append((name, T, w))
            counts[name] = counts.get(name, 0) + 1
    elapsed = time.perf_counter() - start
    total = sum(counts.values())
    ok = not bad and total >= 10_000 and elapsed < 600
    assert report(2, "class-targeted oracle equivalence", ok,
                  f"{total} instances ({', '.join(f'{k} {v}' for k, v in counts.items())}), "
                  f"{len(bad)} mismatches, {elapsed:.1f}s")


def iso_classes(n):
    """One representative per isomorphism class, grown vertex by vertex."""
    reps = {canonical_form(Tournament(0, ())): Tournament(0, ())}
    for m in range(1, n + 1):
        nxt = {}
        for T in reps.values():
            for beats in range(1 << (m - 1)):
                # new vertex m-1 beats exactly the old vertices in ``beats``
                rows = [row | (0 if beats >> v & 1 else 1 << (m - 1)) for v, row in enumerate(T.out)]
                G = Tournament(m, tuple(rows) + (beats,))
                nxt.setdefault(canonical_form(G), G)
        reps = nxt
    return list(reps.values())


def test_3_structure_audit_seven_vertices():
    start = time.perf_counter()
    classes = iso_classes(7)
    named = {"T7": catalog.circulant(7), "U7": catalog.un(7), "Q7": catalog.q7()}
    prime_w5free, matched, seen = 0, 0, set()
    for T in classes:
        if not is_prime(T) or find_induced(T, catalog.W5) is not None:
            continue
        prime_w5free += 1
        hits = [name for name, H in named.items() if is_isomorphic_small(T, H) is not None]
        if len(hits) == 1:
            matched += 1
            seen.add(hits[0])
    elapsed = time.perf_counter() - start
    ok = len(classes) == 456 and matched == prime_w5free and elapsed < 300
    assert report(3, "7-vertex structure audit", ok,
                  f"{len(classes)} classes, {prime_w5free} prime W5-free, {matched} matched exactly one "
                  f"of T7/U7/Q7 ({', '.join(sorted(seen))}), {elapsed:.1f}s")


def test_4_decomposition_invariance():
    rng = random.Random(404)
    bad = 0
    for _ in range(1000):
        T = random_composite(rng, 4, 4)
        w = random_weights(T.n, rng)
        if reduce_to_prime(T, w, oracle_wmisp).weight != oracle_wmisp(T, w).weight:
            bad += 1
    assert report(4, "decomposition invariance", bad == 0, f"1000 composites, {bad} mismatches")


def test_5_reduction_identity_and_freeness():
    rng = random.Random(505)
    graphs = [G for n in range(0, 5) for G in all_graphs(n)]
    graphs += [random_graph(rng.randint(5, 6), rng) for _ in range(200)]
    identity_bad = 0
    for G in graphs:
        T = build_misp_instance(G, "plain").tournament
        if enumerate_wmisp(T).weight != 2 * G.n - brute_force_vertex_cover(G)[0]:
            identity_bad += 1

    three_path = [G for n in range(0, 5) for G in all_graphs(n) if G.m <= 3]
    not_in = not_out = 0
    for G in three_path:
        T = build_misp_instance(G, "3path").tournament
        not_in += not is_1_in_degenerate(T)[0]
        not_out += not is_1_out_degenerate(T)[0]

    snake7 = catalog.snake(7)
    small = [G for n in range(0, 4) for G in all_graphs(n)]
    with_snake = sum(find_induced(build_misp_instance(G, "snake7").tournament, snake7) is not None
                     for G in small)

    ok = identity_bad == 0 and not_in == 0 and not_out == 0 and with_snake == 0
    assert report(5, "reduction identity and gadget freeness", ok,
                  f"identity: {len(graphs)} graphs, {identity_bad} violations; "
                  f"3-path: {len(three_path)} instances, {not_in} not 1-in-degenerate, "
                  f"{not_out} not 1-out-degenerate; "
                  f"7-snake gadget: {len(small)} instances, {with_snake} contain a 7-snake")


def test_6_named_values():
    cases = [("cyclic triangle", catalog.CYCLIC_TRIANGLE, 2), ("T5", catalog.T5, 3),
             ("U5", catalog.U5, 3), ("Q7", catalog.q7(), 3)]
    cases += [(f"I{n}", catalog.transitive(n), n) for n in range(1, 9)]
    wrong = [name for name, T, want in cases
             if not (oracle_wmisp(T).weight == enumerate_wmisp(T).weight == want)]
    assert report(6, "named-value spot checks", not wrong,
                  f"{len(cases)} checks via two oracles, wrong: {', '.join(wrong) or 'none'}")


def _slope(ns, ts):
    xs, ys = [math.log(n) for n in ns], [math.log(t) for t in ts]
    mx, my = sum(xs) / len(xs), sum(ys) / len(ys)
    return sum((x - mx) * (y - my) for x, y in zip(xs, ys)) / sum((x - mx) ** 2 for x in xs)


def _best_time(f, repeats=3):
    best = math.inf
    for _ in range(repeats):
        start = time.perf_counter()
        f()
        best = min(best, time.perf_counter() - start)
    return best


def test_7_polynomial_scaling():
    rng = random.Random(707)
    targets = [25, 50, 100, 200]
    families = {
        # U_n exists only for odd n, so even targets use n + 1
        "U_n": lambda n: (shuffled(catalog.un(n | 1), rng)[0], "w5free"),
        "XYZ": lambda n: (staircase_xyz(n, rng)[0], "u5free"),
    }
    ok, parts = True, []
    for name, build in families.items():
        ns, ts = [], []
        for n in targets:
            T, method = build(n)
            w = random_weights(T.n, rng)
            ts.append(_best_time(lambda: solve(T, w, method=method), repeats=3 if n < 200 else 1))
            ns.append(T.n)
        slope = _slope(ns, ts)
        fine = slope <= 5.5 and ts[-1] < 60
        ok &= fine
        parts.append(f"{name}: n={ns} times={[f'{t:.3f}' for t in ts]}s slope={slope:.2f}")
    assert report(7, "polynomial scaling", ok, "; ".join(parts))
