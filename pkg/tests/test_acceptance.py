"""Acceptance criteria: each test prints one PASS/FAIL line and asserts it."""
import random
import time
from fractions import Fraction as F
from math import gcd

import pytest

from affine_orbits import SymBasis, SymPoint
from affine_orbits.farey import apply, den
from affine_orbits.oracle import SearchBudget, bfs_orbit, c_by_definition, verify_witness
from affine_orbits.orbits import (
    euler_phi,
    group_of,
    invariant_of,
    minimal_space,
    orbit_equiv,
    witness,
)
from affine_orbits.spaces import (
    SpaceInvariants,
    c_of,
    canonical_space,
    classify_space,
    space_from_equations,
)

from conftest import random_rational_point, random_sym_point, random_witness

pytestmark = pytest.mark.acceptance


def report(capsys, number, ok, detail, elapsed, target):
    ok = ok and elapsed < target
    with capsys.disabled():
        print(f"\nacceptance {number}: {'PASS' if ok else 'FAIL'} ({detail}; {elapsed:.2f}s, target < {target}s)")
    assert ok, detail


def test_1_line_exhaustive(capsys):
    start = time.perf_counter()
    points = [F(p, q) for q in range(1, 51) for p in range(q) if gcd(p, q) == 1]

    def brute(x, y):
        # y = s*x + m for a sign s and an integer m, in integer form
        q, a, b = x.denominator, x.numerator, y.numerator
        return q == y.denominator and any((b - s * a) % q == 0 for s in (1, -1))

    ids = {}
    inv = {x: ids.setdefault(invariant_of((x,)), len(ids)) for x in points}
    mismatches, bad_counts, pairs = 0, [], 0
    by_q = {}
    for x in points:
        by_q.setdefault(x.denominator, []).append(x)
    for q, xs in by_q.items():
        for x in xs:
            for y in xs:
                pairs += 1
                mismatches += orbit_equiv((x,), (y,)) != brute(x, y)
        classes = []
        for x in xs:
            if not any(brute(r, x) for r in classes):
                classes.append(x)
        if len(classes) != max(1, euler_phi(q) // 2):
            bad_counts.append(q)
    # pairs with different denominators: never related by ±t + m
    for x in points:
        for y in points:
            if x.denominator != y.denominator:
                pairs += 1
                mismatches += (inv[x] == inv[y]) != brute(x, y)
    detail = f"{pairs} pairs, {mismatches} verdict mismatches, class-count failures at q={bad_counts}"
    report(capsys, 1, mismatches == 0 and not bad_counts, detail, time.perf_counter() - start, 10)


def test_2_witness_soundness(capsys):
    start = time.perf_counter()
    rng = random.Random(2)
    pool = {}
    for _ in range(6000):
        n = rng.randint(1, 4)
        x = random_rational_point(rng, n, 12, 12)
        key = (n, invariant_of(x))
        pool.setdefault(key, set()).add(x)
    buckets = [sorted(v) for v in pool.values() if len(v) >= 2]
    failures = checked = 0
    while checked < 500:
        xs = rng.choice(buckets)
        x, y = rng.sample(xs, 2)
        g = witness(x, y)
        failures += g is None or not verify_witness(g, x, y)
        checked += 1
    detail = f"{checked} matched pairs from {len(buckets)} invariant buckets, {failures} failures"
    report(capsys, 2, failures == 0, detail, time.perf_counter() - start, 60)


def test_3_bfs_never_reaches_nonequivalent(capsys):
    start = time.perf_counter()
    rng = random.Random(3)
    budget = SearchBudget(max_word_length=8, coordinate_bound=3)

    def small_point(n, q):
        return tuple(F(rng.randint(-3 * q, 3 * q), q) for _ in range(n))

    pairs = []
    while len(pairs) < 200:
        n = rng.choice([1, 1, 2, 2, 3])
        q = rng.randint(2, 12)
        x = small_point(n, q)
        for _ in range(5):
            # same denominator half the time, so n = 1 exercises the c component
            y = small_point(n, q if rng.random() < 0.5 else rng.randint(1, 12))
            if not orbit_equiv(x, y):
                pairs.append((x, y))
    pairs = pairs[:200]
    cache = {}
    reached = 0
    for x, y in pairs:
        if x not in cache:
            cache[x] = bfs_orbit(x, budget)
        reached += y in cache[x]
    detail = f"{len(pairs)} non-equivalent pairs, {len(cache)} BFS windows, {reached} reached"
    report(capsys, 3, reached == 0, detail, time.perf_counter() - start, 120)


def test_4_c_oracle(capsys):
    start = time.perf_counter()
    checked = disagreements = 0
    for n in (1, 2, 3):
        for d in range(1, 21):
            for p in range(d):
                if gcd(p, d) != 1:
                    continue
                f = space_from_equations([([int(j == n - 1) for j in range(n)], F(p, d))])
                checked += 1
                disagreements += c_of(f) != c_by_definition(f, d)
    detail = f"{checked} hyperplanes, {disagreements} disagreements"
    report(capsys, 4, disagreements == 0, detail, time.perf_counter() - start, 30)


def test_5_structural_invariants(capsys):
    start = time.perf_counter()
    rng = random.Random(5)
    bases = [SymBasis(), SymBasis(("a",)), SymBasis(("a", "b"))]
    rank_bad = den_bad = transform_bad = 0
    for i in range(1000):
        n = rng.randint(1, 4)
        if i % 2 == 0:
            x = SymPoint.rational(random_rational_point(rng, n, 12, 12))
        else:
            x = random_sym_point(rng, n, rng.choice(bases[1:]), rng.uniform(0.2, 0.9))
        gx, fx = group_of(x), minimal_space(x)
        rank_bad += gx.rank != fx.dim + 1
        gammas = [random_witness(rng, n) for _ in range(100)]
        if x.is_rational:
            xr = x.as_rational()
            den_bad += sum(den(apply(g, xr)) != den(xr) for g in gammas)
        for g in gammas[:10]:
            y = g(x)
            transform_bad += group_of(y) != gx or minimal_space(y) != fx.image(g)
    detail = f"1000 points: rank failures {rank_bad}, den failures {den_bad}, transform failures {transform_bad}"
    ok = rank_bad == den_bad == transform_bad == 0
    report(capsys, 5, ok, detail, time.perf_counter() - start, 60)


def test_6_special_denominators(capsys):
    start = time.perf_counter()
    checked = failures = 0
    for n in (1, 2, 3, 4):
        for zeros in range(n):
            for d in (1, 2, 3, 4, 6):
                pts = [(F(0),) * zeros + (F(p, d),) * (n - zeros) for p in range(d) if gcd(p, d) == 1]
                for x in pts:
                    for y in pts:
                        g = witness(x, y)
                        checked += 1
                        failures += g is None or not verify_witness(g, x, y)
    # symbolic shapes: (a, p/d, ..., p/d)
    basis = SymBasis(("a",))
    for n in (2, 3):
        for d in (1, 2, 3, 4, 6):
            pts = [SymPoint(basis, ((F(0), F(1)),) + ((F(p, d), F(0)),) * (n - 1)) for p in range(d) if gcd(p, d) == 1]
            for x in pts:
                for y in pts:
                    g = witness(x, y)
                    checked += 1
                    failures += g is None or g(x) != y
    detail = f"{checked} pairs, {failures} failures"
    report(capsys, 6, failures == 0, detail, time.perf_counter() - start, 10)


def test_7_canonical_round_trip(capsys):
    start = time.perf_counter()
    checked = failures = 0
    for n in (1, 2, 3, 4):
        for e in range(n + 1):
            for d in range(1, 31):
                if e == n and d > 1:
                    continue
                cs = [c for c in range(1, max(1, d // 2) + 1) if gcd(c, d) == 1] if e == n - 1 else [1]
                for c in cs:
                    space, _ = canonical_space((e, d, c), n)
                    checked += 1
                    failures += classify_space(space) != SpaceInvariants(e, d, c)
    detail = f"{checked} valid triples, {failures} failures"
    report(capsys, 7, failures == 0, detail, time.perf_counter() - start, 30)
