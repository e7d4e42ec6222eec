import random
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from piperfect.core import BitWord, LengthMismatch, WeightVector
from piperfect.metric import (
    error_patterns,
    pi_distance,
    pi_weight,
    sphere_enumerate,
    sphere_enumerate_scan,
    sphere_size,
)


def accumulate(bits, pi):
    # per-position oracle
    return sum(pi.weights[i] for i in range(pi.n) if bits >> i & 1)


def test_pi_weight_examples(example_pi):
    assert pi_weight(BitWord(0, 6), example_pi) == 0
    x = BitWord.parse("101100")
    assert pi_weight(x, example_pi) == accumulate(x.bits, example_pi) == 5


def test_pi_weight_length_mismatch(example_pi):
    with pytest.raises(LengthMismatch):
        pi_weight(BitWord.parse("101"), example_pi)


def test_pi_distance_examples(example_pi):
    x, y = BitWord.parse("001111"), BitWord.parse("101100")
    assert pi_distance(x, x, example_pi) == 0
    assert pi_distance(x, y, example_pi) == pi_weight(BitWord.parse("100011"), example_pi) == 5


weights = st.lists(st.integers(1, 4), min_size=1, max_size=16)


@settings(max_examples=200)
@given(weights, st.data())
def test_metric_axioms(ws, data):
    pi = WeightVector(tuple(ws))
    word = st.integers(0, 2**pi.n - 1)
    x, y, z = data.draw(word), data.draw(word), data.draw(word)
    d = lambda a, b: pi_distance(a, b, pi)
    assert d(x, y) >= 0
    assert (d(x, y) == 0) == (x == y)
    assert d(x, y) == d(y, x)
    assert d(x, z) <= d(x, y) + d(y, z)


def test_sphere_small_cases(example_pi):
    x = BitWord.parse("110010")
    assert sphere_enumerate(x, 0, example_pi) == {x.bits}
    got = {str(BitWord(b, 6)) for b in sphere_enumerate(0, 2, example_pi)}
    assert got == {"000000", "100000", "010000", "110000", "001000", "000100", "000010", "000001"}
    assert sphere_enumerate_scan(0, 2, example_pi) == sphere_enumerate(0, 2, example_pi)


def test_sphere_negative_radius_is_empty(example_pi):
    assert error_patterns(example_pi, -1) == []


def test_sphere_size_two_valued():
    for n, m in [(6, 2), (12, 3), (9, 4), (15, 0)]:
        pi = WeightVector((1,) * m + (2,) * (n - m))
        assert sphere_size(pi, 2).total == 1 + n + comb(m, 2)


def test_sphere_size_hamming_example():
    # X1 = {1,2,4,8,15}, every other position weight 3
    x1 = {1, 2, 4, 8, 15}
    pi = WeightVector(tuple(1 if i in x1 else 3 for i in range(1, 16)))
    s = sphere_size(pi, 2)
    assert s.total == 1 + 5 + 10 + 0 == 16
    assert s.compositions == {(): 1, ((1, 1),): 5, ((1, 2),): 10}


def test_sphere_size_three_perfect_closed_form():
    for m in (2, 3, 4, 5):
        pi = WeightVector((1,) + (2,) * (2**m - 1))
        x2 = 2**m - 1
        assert sphere_size(pi, 3).total == 1 + 1 + x2 + 0 + 0 + 0 + x2 == 2 ** (m + 1)


def test_sphere_size_all_ones_is_binomial_sum():
    for n in range(1, 14):
        for r in range(0, n + 2):
            assert sphere_size(WeightVector.ones(n), r).total == sum(comb(n, i) for i in range(r + 1))


def test_sphere_size_big_integers():
    pi = WeightVector((1,) * 64)
    assert sphere_size(pi, 30).total == sum(comb(64, i) for i in range(31))


def test_sphere_enumeration_matches_dp_exhaustively():
    rng = random.Random(11)
    for n in range(1, 13):
        pi = WeightVector(tuple(rng.randint(1, 4) for _ in range(n)))
        for r in range(0, 7):
            scan0 = sphere_enumerate_scan(0, r, pi)
            assert sphere_enumerate(0, r, pi) == scan0
            assert len(scan0) == sphere_size(pi, r).total
            for x in range(0, 1 << n, max(1, (1 << n) // 7)):
                assert sphere_enumerate(x, r, pi) == sphere_enumerate_scan(x, r, pi)
