import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from genus2count.gw0 import (
    DEFAULT_TABLE,
    GWKey,
    GWTable,
    N_p3,
    gw0,
    n_plane,
    wdvv_relation_residual,
)

# Kontsevich recursion from n_1 = 1; the d = 3, 4 values also feed the
# degree-four plane pipeline, whose table anchor is sensitive to both.
PLANE = {1: 1, 2: 1, 3: 12, 4: 620, 5: 87304}


def test_n_plane_table():
    for d, value in PLANE.items():
        assert n_plane(d) == value
    with pytest.raises(ValueError):
        n_plane(0)


def test_plane_gw_reduces_to_n_plane():
    assert gw0(2, 4, (2,) * 11) == 620
    assert gw0(2, 4, (2,) * 10) == 0  # imbalance
    assert gw0(2, 3, (1, 1) + (2,) * 8) == 9 * 12  # divisor applied twice


def test_degree_zero_triple_products():
    assert gw0(3, 0, (1, 1, 1)) == 1
    assert gw0(2, 0, (1, 1, 0)) == 1
    assert gw0(3, 0, (3, 2, 1)) == 0
    with pytest.raises(ValueError):
        gw0(3, 0, (3, 3))
    with pytest.raises(ValueError):
        gw0(3, -1, (3, 3))


def test_fundamental_class_kills():
    assert gw0(3, 1, (0, 3, 3)) == 0
    assert gw0(2, 2, (0, 2, 2, 2, 2, 2)) == 0


def test_p3_base_and_lines():
    assert gw0(3, 1, (3, 3)) == 1
    assert gw0(3, 1, (2, 2, 2, 2)) == 2
    assert N_p3(1, 0, 4) == 2


def test_p3_degree_two_classical():
    # conics: through 8 lines / 1 point + 6 lines / ... / 4 points
    assert [N_p3(2, p, 8 - 2 * p) for p in range(5)] == [92, 18, 4, 1, 0]


def test_p3_degree_three_classical():
    assert N_p3(3, 6, 0) == 1  # twisted cubics through six points
    assert N_p3(3, 0, 12) == 80160
    with pytest.raises(ValueError):
        N_p3(3, 6, 1)


def _random_balanced_key(rng):
    d = rng.randint(1, 3)
    b = rng.randint(0, 2 * d)
    a = 4 * d - 2 * b
    ins = [3] * b + [2] * a
    rng.shuffle(ins)
    return d, ins


def test_insertion_order_independence():
    rng = random.Random(7)
    for _ in range(100):
        d, ins = _random_balanced_key(rng)
        value = gw0(3, d, tuple(ins))
        rng.shuffle(ins)
        assert gw0(3, d, tuple(ins)) == value
        assert value >= 0


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 3), st.integers(0, 5), st.data())
def test_divisor_axiom(d, extra_ones, data):
    b = data.draw(st.integers(0, 2 * d))
    a = 4 * d - 2 * b
    base = (2,) * a + (3,) * b
    assert gw0(3, d, base + (1,) * extra_ones) == d ** extra_ones * gw0(3, d, base)


def test_wdvv_relation_consistency():
    # Associativity residual vanishes for every choice of four fixed slots;
    # different relation choices therefore reconstruct equal invariants.
    rng = random.Random(11)
    checked = 0
    while checked < 100:
        d = rng.randint(1, 3)
        gammas = tuple(rng.choice((1, 2, 3)) for _ in range(4))
        # spectators chosen to balance the relation multiset
        sigma = (4 * d) - sum(g - 1 for g in gammas)
        if sigma < 0:
            continue
        b = rng.randint(0, sigma // 2)
        a = sigma - 2 * b
        assert wdvv_relation_residual(d, gammas, (2,) * a + (3,) * b) == 0
        checked += 1


def test_table_write_once():
    table = GWTable()
    key = GWKey(3, 1, (3, 3))
    table.record(key, 1)
    table.record(key, 1)
    with pytest.raises(AssertionError):
        table.record(key, 2)
    assert table.lookup(key) == 1
    assert table.stats()["entries"] == 1


def test_default_table_reused():
    before = DEFAULT_TABLE.stats()["entries"]
    gw0(3, 2, (2,) * 8)
    assert DEFAULT_TABLE.stats()["entries"] >= before


def test_p3_base_case_wrapper():
    assert N_p3(1, 2, 0) == 1  # one line through two points
