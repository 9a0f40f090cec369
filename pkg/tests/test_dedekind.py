import random

import pytest

from monogen.dedekind import SplittingType, dedekind_test
from monogen.poly import IntPoly, discriminant, parse_poly
from monogen.arith import valuation
from _util import random_monic


def test_index_divisor_detected_for_shifted_square():
    # Z[sqrt(5)] has index 2 in the maximal order since 5 = 1 mod 4
    result = dedekind_test(parse_poly("x^2 - 5"), 2)
    assert result.divides_index
    assert str(result.witness) == "x + 1"
    assert result.splitting is None


def test_totally_ramified_prime():
    result = dedekind_test(parse_poly("x^2 - 2"), 2)
    assert not result.divides_index
    assert result.splitting.pairs == ((2, 1),)


def test_squarefree_reduction_is_vacuous():
    result = dedekind_test(parse_poly("x^3 - x - 1"), 5)
    assert not result.divides_index
    assert result.splitting.degree_sum == 3


def test_rejects_non_monic():
    with pytest.raises(ValueError):
        dedekind_test(parse_poly("2x^2 + 1"), 3)


def test_splitting_type_sorted_and_validated():
    s = SplittingType(((2, 1), (1, 2), (1, 1)))
    assert s.pairs == ((1, 1), (1, 2), (2, 1))
    assert s.residue_degree_counts() == {1: 2, 2: 1}
    with pytest.raises(ValueError):
        SplittingType(((0, 1),))


def test_eisenstein_polynomials_never_divide_index():
    rng = random.Random(17)
    for p in (2, 3, 5, 7):
        for _ in range(20):
            degree = rng.randint(2, 6)
            coeffs = [p * rng.randint(-4, 4) for _ in range(degree)] + [1]
            coeffs[0] = p * rng.choice([c for c in range(-4, 5) if c % p != 0])
            f = IntPoly(coeffs)
            result = dedekind_test(f, p)
            assert not result.divides_index
            assert result.splitting.pairs == ((degree, 1),)


def test_prime_coprime_to_discriminant_never_divides_index():
    rng = random.Random(19)
    checked = 0
    while checked < 60:
        f = random_monic(rng, rng.randint(2, 6), 12)
        disc = discriminant(f)
        if disc == 0:
            continue
        for p in (2, 3, 5, 7, 11, 13):
            if valuation(disc, p) == 0:
                assert not dedekind_test(f, p).divides_index
                checked += 1


def test_splitting_degrees_always_sum_to_degree():
    rng = random.Random(29)
    checked = 0
    while checked < 80:
        f = random_monic(rng, rng.randint(2, 6), 15)
        if discriminant(f) == 0:
            continue
        p = rng.choice([2, 3, 5, 7, 11, 13])
        result = dedekind_test(f, p)
        if not result.divides_index:
            assert result.splitting.degree_sum == f.degree
        checked += 1
