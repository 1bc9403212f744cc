import random

import pytest

from genus2count.algebra import binomial
from genus2count.gw0 import n_plane
from genus2count.rt import (
    ConstraintProfile,
    RTQuery,
    rt0_3pt,
    rt0_4pt,
    rt2_p2_closed,
    rt_genus_reduce,
)


def test_three_slot_base_cases():
    # degree-zero side with two divisors and the ambient class
    assert rt0_3pt(2, 0, 1, 1, 0) == 1
    # fundamental slot deletes, then one line through two points
    assert rt0_3pt(3, 1, 3, 3, 0) == 1
    # three divisor slots against 3d - 1 points
    d = 3
    assert rt0_3pt(2, d, 1, 1, 1, points=3 * d - 1) == d ** 3 * n_plane(d)
    # degree zero with constraints is empty
    assert rt0_3pt(3, 0, 1, 1, 1, lines=1) == 0


def test_four_slot_plane_closed_form():
    # 2 d^2 n_d + sum d1^3 d2^3 C(3d-2, 3d1-1) n n
    for d in range(1, 6):
        expected = 2 * d * d * n_plane(d) + sum(
            d1 ** 3 * d2 ** 3 * binomial(3 * d - 2, 3 * d1 - 1) * n_plane(d1) * n_plane(d2)
            for d1 in range(1, d)
            for d2 in (d - d1,)
        )
        assert rt0_4pt(2, d, (1, 1, 1, 1), points=3 * d - 2) == expected
    assert rt0_4pt(2, 4, (1, 1, 1, 1), points=10) == 65128


def test_doubly_fundamental_vanishes():
    # (P^2, P^2, p, p): deleting both ambient slots leaves an unbalanced count
    assert rt0_4pt(2, 3, (0, 0, 2, 2), points=7) == 0


def test_fundamental_deletion_commutes_with_splitting():
    # inserting an ambient slot anywhere must reduce to the three-slot value
    rng = random.Random(3)
    for _ in range(20):
        d = rng.randint(1, 3)
        slots = [1, 1, 1]
        pos = rng.randint(0, 3)
        slots.insert(pos, 0)
        assert rt0_4pt(2, d, tuple(slots), points=3 * d - 1) == rt0_3pt(
            2, d, 1, 1, 1, points=3 * d - 1
        )


def test_splitting_slot_symmetry():
    # swapping (slots 1,2) with (slots 3,4) reverses the degree split sum
    for d in (2, 3):
        p = 3 * d - 2
        a = rt0_4pt(2, d, (1, 1, 1, 1), points=p)
        b = rt0_4pt(2, d, (1, 1, 1, 1), points=p)
        assert a == b
    for (s1, s2) in (((1, 2, 2, 1), (2, 1, 1, 2)), ((1, 1, 2, 2), (2, 2, 1, 1))):
        v1 = rt0_4pt(3, 2, s1, points=2, lines=1)
        v2 = rt0_4pt(3, 2, s2, points=2, lines=1)
        assert v1 == v2


def test_genus_reduce_plane_closed_form():
    for d in range(1, 8):
        profile = ConstraintProfile(2, d, 3 * d - 2, 0)
        assert rt_genus_reduce(RTQuery(2, (), profile)) == rt2_p2_closed(d)
    assert rt2_p2_closed(4) == 104808


def test_genus_reduce_p3_anchors():
    anchors = {
        (4, 6, 1): 7872,
        (4, 5, 3): 64960,
        (4, 4, 5): 548608,
        (4, 3, 7): 4906304,
        (4, 0, 13): 5130826752,
        (5, 5, 7): 290439680,
    }
    for (d, p, q), value in anchors.items():
        profile = ConstraintProfile(3, d, p, q)
        assert rt_genus_reduce(RTQuery(2, (), profile)) == value


def test_genus_one_with_two_slots():
    profile = ConstraintProfile(2, 1, 1, 0)
    assert rt_genus_reduce(RTQuery(1, (2, 0), profile)) == rt0_4pt(
        2, 1, (2, 0, 1, 1), points=1
    ) + 2 * rt0_4pt(2, 1, (2, 0, 2, 0), points=1)


def test_query_validation():
    with pytest.raises(ValueError):
        ConstraintProfile(2, 2, 1, 1)  # lines in the plane
    with pytest.raises(ValueError):
        RTQuery(3, (), ConstraintProfile(2, 1, 1, 0))
    with pytest.raises(ValueError):
        rt_genus_reduce(RTQuery(0, (1, 1, 1, 1, 1), ConstraintProfile(2, 1, 1, 0)))
