"""Exact polynomial arithmetic and vanishing sums of roots of unity,
cross-checked against sympy and direct float evaluation."""

import doctest
import math
import random

import pytest
import sympy

from spectile import cyclotomic
from spectile.cyclotomic import (IntPolynomial, ResidueMultiset,
                                 cyclotomic_poly, root_sum_is_zero,
                                 root_sum_value)


def test_doctests_pass():
    failed, attempted = doctest.testmod(cyclotomic)
    assert attempted > 0
    assert failed == 0


def test_polynomial_construction_trims_and_rejects():
    assert IntPolynomial.of([1, 2, 0, 0]).coeffs == (1, 2)
    assert IntPolynomial.of([0, 0]).coeffs == ()
    assert IntPolynomial.of([]).degree == -1
    with pytest.raises(ValueError):
        IntPolynomial((1, 0))


def test_polynomial_arithmetic_identities():
    rng = random.Random(101)
    for _ in range(50):
        f = IntPolynomial.of([rng.randint(-5, 5) for _ in range(rng.randint(0, 6))])
        g = IntPolynomial.of([rng.randint(-5, 5) for _ in range(rng.randint(0, 6))])
        assert (f + g) - g == f
        assert f * g == g * f
        x = rng.randint(-3, 3)
        assert (f * g).evaluate(x) == f.evaluate(x) * g.evaluate(x)
        assert (f + g).evaluate(x) == f.evaluate(x) + g.evaluate(x)


def test_divmod_reconstructs_and_requires_monic():
    rng = random.Random(202)
    for _ in range(50):
        f = IntPolynomial.of([rng.randint(-9, 9) for _ in range(rng.randint(0, 8))])
        d = IntPolynomial.of([rng.randint(-9, 9) for _ in range(rng.randint(0, 4))] + [1])
        q, r = divmod(f, d)
        assert q * d + r == f
        assert r.degree < d.degree
    with pytest.raises(ValueError):
        divmod(IntPolynomial.of([1, 1]), IntPolynomial.of([2, 2]))
    with pytest.raises(ZeroDivisionError):
        divmod(IntPolynomial.of([1, 1]), IntPolynomial.of([]))


def test_cyclotomic_matches_sympy():
    x = sympy.Symbol("x")
    for m in range(1, 61):
        ours = cyclotomic_poly(m).coeffs
        theirs = tuple(reversed(sympy.Poly(sympy.cyclotomic_poly(m, x), x).all_coeffs()))
        assert ours == theirs, f"cyclotomic mismatch at m={m}"


def test_cyclotomic_degree_is_totient():
    for m in range(1, 40):
        assert cyclotomic_poly(m).degree == sympy.totient(m)


def test_cyclotomic_rejects_nonpositive():
    with pytest.raises(ValueError):
        cyclotomic_poly(0)
    with pytest.raises(ValueError):
        cyclotomic_poly(-3)


def test_residue_multiset_validation():
    ms = ResidueMultiset.of(6, [7, 1, -2, 4])
    assert ms.entries == (1, 1, 4, 4)
    assert len(ms) == 4
    assert ms.shifted(3).entries == (1, 1, 4, 4)
    with pytest.raises(ValueError):
        ResidueMultiset(0, ())
    with pytest.raises(ValueError):
        ResidueMultiset(4, (4,))


def test_known_vanishing_sums():
    # full group, subgroup cosets, and the empty sum all vanish
    assert root_sum_is_zero(ResidueMultiset.of(1, []))
    assert root_sum_is_zero(ResidueMultiset.of(5, range(5)))
    assert root_sum_is_zero(ResidueMultiset.of(6, [0, 2, 4]))
    assert root_sum_is_zero(ResidueMultiset.of(6, [1, 3, 5]))
    assert root_sum_is_zero(ResidueMultiset.of(12, [1, 4, 7, 10]))
    # sums of two disjoint vanishing sets vanish
    assert root_sum_is_zero(ResidueMultiset.of(6, [0, 3, 1, 3, 5]))
    assert not root_sum_is_zero(ResidueMultiset.of(6, [0]))
    assert not root_sum_is_zero(ResidueMultiset.of(4, [0, 1]))
    assert not root_sum_is_zero(ResidueMultiset.of(1, [0, 0]))


def test_vanishing_invariant_under_rotation():
    rng = random.Random(303)
    for _ in range(100):
        m = rng.randint(1, 30)
        entries = [rng.randrange(m) for _ in range(rng.randint(0, 6))]
        ms = ResidueMultiset.of(m, entries)
        shift = rng.randrange(m)
        assert root_sum_is_zero(ms) == root_sum_is_zero(ms.shifted(shift))


def test_exact_and_float_agree_on_random_multisets():
    rng = random.Random(404)
    for _ in range(500):
        m = rng.randint(1, 40)
        entries = [rng.randrange(m) for _ in range(rng.randint(0, 8))]
        ms = ResidueMultiset.of(m, entries)
        assert root_sum_is_zero(ms) == (abs(root_sum_value(ms)) < 1e-9)


def test_float_value_matches_direct_sum():
    ms = ResidueMultiset.of(7, [0, 2, 3, 3])
    direct = sum(complex(math.cos(2 * math.pi * e / 7),
                         math.sin(2 * math.pi * e / 7)) for e in ms.entries)
    assert abs(root_sum_value(ms) - direct) < 1e-12
