from fractions import Fraction
from itertools import combinations_with_replacement

import pytest

from genus2count.algebra import binomial, constraint_classes, diagonal_pairs, diagonal_triples
from genus2count.gw0 import gw0, n_plane
from genus2count.nodecounts import (
    SplitProfile,
    boundary_pairing,
    tau2_p2,
    tau_common_node,
    tau_common_node_p3,
)


def test_tau2_p2_values():
    assert tau2_p2(1) == 0
    assert tau2_p2(2) == 3  # single split (1,1): C(4,2)/2
    assert tau2_p2(3) == 42
    assert tau2_p2(4) == 2124
    with pytest.raises(ValueError):
        tau2_p2(0)


def test_tau_common_node_matches_tau2_on_plane():
    for d in range(1, 6):
        value = tau_common_node(2, d, 3 * d - 2, 0, 2, 0)
        assert value == tau2_p2(d)


def test_tau3_small_vanishing():
    # total degree two cannot split into three positive parts
    assert tau_common_node_p3(2, 2, 1, 3, 0) == 0
    # no split of one into two positive parts
    assert tau_common_node_p3(1, 0, 1, 2, 2) == 0
    with pytest.raises(ValueError):
        tau_common_node_p3(3, 4, 1, 4, 0)
    with pytest.raises(ValueError):
        tau_common_node_p3(3, 4, 1, 2, 1)


def _tau_unordered(n, d, points, lines, arity, decoration):
    """Oracle: enumerate unordered degree profiles, weighting each by its
    number of distinct arrangements over arity! (multiplicity of repeated
    identical components)."""
    from itertools import permutations
    from math import factorial

    from genus2count.algebra import weighted_partitions

    mu = constraint_classes(n, points, lines)
    if arity == 2:
        diag = [((e1, e2), Fraction(1)) for (e1, e2) in diagonal_pairs(n)]
    else:
        diag = diagonal_triples(n)
    total = Fraction(0)
    unordered = {
        parts
        for parts in combinations_with_replacement(range(1, d), arity)
        if sum(parts) == d
    }
    for degrees in unordered:
        for ordered in set(permutations(degrees)):
            for split, weight in weighted_partitions(mu, arity):
                for exponents, coeff in diag:
                    decorated = (exponents[0] + decoration,) + tuple(exponents[1:])
                    if decorated[0] > n:
                        continue
                    term = Fraction(weight) * coeff
                    for deg_i, side_i, node_i in zip(ordered, split, decorated):
                        factor = gw0(n, deg_i, side_i + (node_i,))
                        if factor == 0:
                            term = Fraction(0)
                            break
                        term *= factor
                    total += term
    return total / factorial(arity)


def test_tau_ordered_vs_unordered_enumeration():
    for (n, d, p, q, k, dec) in [
        (2, 3, 7, 0, 2, 0),
        (2, 4, 10, 0, 2, 0),
        (3, 3, 3, 3, 2, 2),
        (3, 3, 2, 5, 3, 0),
        (3, 4, 3, 7, 3, 0),
    ]:
        assert tau_common_node(n, d, p, q, k, dec) == _tau_unordered(n, d, p, q, k, dec)


def test_tau_values_are_integers():
    for (d, p, q) in [(3, 3, 3), (4, 3, 7), (4, 0, 13)]:
        for (k, dec) in ((2, 2), (3, 0)):
            value = tau_common_node_p3(d, p, q, k, dec)
            assert value.denominator == 1
            assert value >= 0


def test_split_profile_validation():
    SplitProfile((1, 2), (1, 2), (0, 1), 0)
    with pytest.raises(ValueError):
        SplitProfile((0, 3), (1, 2), (0, 1), 0)
    with pytest.raises(ValueError):
        SplitProfile((1, 2), (1,), (0, 1), 0)


def test_boundary_pairing_weighted_sum_plane():
    # sum over splits of d2^2 <a, boundary stratum> equals
    # (d/2) sum d1^2 d2^2 C(3d-2, 3d1-1) n n; at d = 3 this is 252.
    for d in (3, 4):
        total = Fraction(0)
        p = 3 * d - 2
        for d1 in range(1, d):
            d2 = d - d1
            for p1 in range(p + 1):
                weight = binomial(p, p1)
                side1 = (2,) * p1 + (1,)  # evaluation class on the first side
                side2 = (2,) * (p - p1)
                sigma = sum(e - 1 for e in side1 + side2)
                if sigma != 3 * d - 2:
                    continue
                total += d2 * d2 * weight * boundary_pairing(2, d1, d2, side1, side2)
        expected = Fraction(d, 2) * sum(
            d1 * d1 * d2 * d2 * binomial(3 * d - 2, 3 * d1 - 1) * n_plane(d1) * n_plane(d2)
            for d1 in range(1, d)
            for d2 in (d - d1,)
        )
        assert total == expected
    assert Fraction(3, 2) * 168 == 252


def test_boundary_pairing_validation():
    with pytest.raises(ValueError):
        boundary_pairing(2, 0, 3, (2, 2), (2, 2))
    with pytest.raises(ValueError):
        boundary_pairing(2, 1, 1, (2, 2, 2), (2, 2))


def test_decoration_slot_immaterial():
    # cupping the decoration onto the last diagonal slot instead of the
    # first gives the same count, by symmetry of the diagonal

    def tau_last_slot(n, d, points, lines, arity, decoration):
        from math import factorial

        from genus2count.algebra import weighted_partitions
        from genus2count.nodecounts import _ordered_degree_splits

        mu = constraint_classes(n, points, lines)
        if arity == 2:
            diag = [((e1, e2), Fraction(1)) for (e1, e2) in diagonal_pairs(n)]
        else:
            diag = diagonal_triples(n)
        total = Fraction(0)
        for degrees in _ordered_degree_splits(d, arity):
            for split, weight in weighted_partitions(mu, arity):
                for exponents, coeff in diag:
                    decorated = tuple(exponents[:-1]) + (exponents[-1] + decoration,)
                    if decorated[-1] > n:
                        continue
                    term = Fraction(weight) * coeff
                    for deg_i, side_i, node_i in zip(degrees, split, decorated):
                        factor = gw0(n, deg_i, side_i + (node_i,))
                        if factor == 0:
                            term = Fraction(0)
                            break
                        term *= factor
                    total += term
        return total / factorial(arity)

    for (d, p, q, k, dec) in [(3, 3, 3, 2, 2), (4, 3, 7, 2, 2), (3, 2, 5, 3, 0)]:
        assert tau_common_node(3, d, p, q, k, dec) == tau_last_slot(3, d, p, q, k, dec)
