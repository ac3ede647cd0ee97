"""Cyclic tiling verdicts and complement searches, with a brute-force
oracle for completeness at small periods."""

import random
import time
from itertools import combinations

import pytest

from spectile import (IntSet, PeriodicSet, SearchTimeout, certify_tiling,
                      find_common_complement, find_complements, is_tiling_of_Z,
                      tiles_cyclic)


def brute_force_complements(tile, m):
    """Every R inside [0, m) with 0 in R, |R| = m/|tile|, tiling Z_m."""
    tile = IntSet.of(tile)
    if m % len(tile):
        return []
    size = m // len(tile)
    out = []
    for rest in combinations(range(1, m), size - 1):
        r = (0,) + rest
        if tiles_cyclic(tile, r, m):
            out.append(r)
    return out


def test_periodic_set_validation():
    ps = PeriodicSet.of([5, -1, 2], 4)
    assert ps.residues == (1, 2, 3) and ps.period == 4
    assert 6 in ps and 4 not in ps
    assert len(ps) == 3
    with pytest.raises(ValueError):
        PeriodicSet((0, 4), 4)
    with pytest.raises(ValueError):
        PeriodicSet((0,), 0)


def test_tiles_cyclic_examples():
    assert tiles_cyclic([0, 1], [0], 2)
    assert tiles_cyclic([0, 5], [0], 2)
    assert not tiles_cyclic([0, 2], [0], 2)
    assert not tiles_cyclic([0, 1], [0, 1], 2)
    assert tiles_cyclic([0, 1, 2, 3], [0, 4], 8)
    with pytest.raises(ValueError):
        tiles_cyclic([0, 1], [0], 0)


def test_tiles_cyclic_translation_invariance():
    rng = random.Random(17)
    for _ in range(60):
        m = rng.randint(2, 14)
        size = rng.choice([d for d in range(1, m + 1) if m % d == 0])
        tile = rng.sample(range(m), size)
        residues = rng.sample(range(m), m // size)
        c = rng.randint(-10, 10)
        shifted = [a + c for a in tile]
        assert tiles_cyclic(tile, residues, m) == \
            tiles_cyclic(shifted, residues, m)


def test_find_complements_examples():
    assert find_complements([0, 1], 4) == [(0, 2)]
    # {0,2} has both interleaved complements mod 4; the brute-force oracle
    # below confirms the pair is exhaustive
    assert find_complements([0, 2], 4) == [(0, 1), (0, 3)]
    assert find_complements([0, 1, 2, 3], 4) == [(0,)]
    assert find_complements([0], 1) == [(0,)]


def test_find_complements_degenerate_inputs():
    assert find_complements([0, 1], 3) == []
    assert find_complements([0, 2], 2) == []
    assert find_complements([], 4) == []


def test_find_complements_matches_brute_force():
    rng = random.Random(23)
    cases = [([0, 1], 4), ([0, 2], 4), ([0, 1], 6), ([0, 3], 6),
             ([0, 1, 2], 6), ([0, 2, 4], 6), ([0, 1, 4, 5], 8),
             ([0, 1, 2, 3], 8), ([0, 2], 16), ([0, 1, 8, 9], 16)]
    for _ in range(20):
        m = rng.randint(2, 12)
        size = rng.choice([d for d in range(1, m + 1) if m % d == 0])
        cases.append((sorted(rng.sample(range(m), size)), m))
    for tile, m in cases:
        found = find_complements(tile, m)
        assert found == brute_force_complements(tile, m), (tile, m)
        for r in found:
            assert tiles_cyclic(tile, r, m)


def test_find_complements_sorted_output():
    found = find_complements([0, 4], 8)
    assert found == sorted(found)
    assert all(r[0] == 0 for r in found)


def test_find_common_complement_examples():
    got = find_common_complement([[0, 1], [0, 3], [0, 5]], 8)
    assert (got.residues, got.period) == ((0,), 2)
    got = find_common_complement([[0, 1, 2, 3], [0, 5, 2, 7]], 8)
    assert (got.residues, got.period) == ((0,), 4)
    got = find_common_complement([[0, 2, 4, 6], [0, 2, 4, 14]], 16)
    assert (got.residues, got.period) == ((0, 1), 8)


def test_find_common_complement_soundness_and_minimality():
    family = [[0, 2, 4, 6], [0, 2, 4, 14]]
    got = find_common_complement(family, 16)
    assert got.period == 8
    for member in family:
        assert is_tiling_of_Z(member, got)
    # the only smaller admissible period is 4, where neither member tiles
    for member in family:
        assert brute_force_complements(member, 4) == []


def test_find_common_complement_bounds_and_errors():
    assert find_common_complement([[0, 1]], 1) is None
    assert find_common_complement([[0, 2], [0, 1]], 12) is None
    with pytest.raises(ValueError):
        find_common_complement([], 8)
    with pytest.raises(ValueError):
        find_common_complement([[0, 1], [0, 1, 2]], 8)


def test_find_common_complement_deadline():
    past = time.monotonic() - 1.0
    with pytest.raises(SearchTimeout):
        find_common_complement([[0, 1], [0, 3]], 8, deadline=past)


def test_is_tiling_of_Z_examples():
    assert is_tiling_of_Z([0, 1], PeriodicSet.of([0], 2))
    assert not is_tiling_of_Z([0, 1], PeriodicSet.of([0, 1], 2))
    assert is_tiling_of_Z([0, 3], PeriodicSet.of([0], 2))


def test_certify_tiling():
    cert = certify_tiling([0, 3], PeriodicSet.of([0], 2))
    assert cert.tile == IntSet.of([0, 3])
    assert cert.checked_window == (0, 2)
    with pytest.raises(ValueError):
        certify_tiling([0, 2], PeriodicSet.of([0], 2))


def test_counting_invariant():
    rng = random.Random(31)
    for _ in range(40):
        m = rng.randint(2, 12)
        size = rng.choice([d for d in range(1, m + 1) if m % d == 0])
        tile = sorted(rng.sample(range(m), size))
        for r in find_complements(tile, m):
            assert len(tile) * len(r) == m
