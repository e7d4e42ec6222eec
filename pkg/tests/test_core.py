import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from piperfect.core import (
    BitWord,
    ExplicitCode,
    InfeasibleParameters,
    InstanceTooLarge,
    LengthMismatch,
    LinearCode,
    TwoValuedProfile,
    WeightVector,
    enumerate_codewords,
    rank,
    support,
)
from piperfect.hamming import build


def test_support_examples():
    assert support(BitWord.parse("000000")) == set()
    assert support(BitWord.parse("001111")) == {3, 4, 5, 6}
    assert support(BitWord.parse("101100")) == {1, 3, 4}


def test_bitword_positions_are_one_based():
    w = BitWord.from_support({1, 3}, 4)
    assert w.bits == 0b101
    assert str(w) == "1010"


def test_bitword_rejects_overflow():
    with pytest.raises(ValueError):
        BitWord(0b1000, 3)
    with pytest.raises(ValueError):
        BitWord(0, 65)


@given(st.integers(1, 64).flatmap(lambda n: st.tuples(st.just(n), st.integers(0, 2**n - 1))))
def test_bitword_roundtrip_and_support_size(nb):
    n, bits = nb
    w = BitWord(bits, n)
    assert BitWord.parse(str(w)) == w
    assert len(w.support()) == w.hamming_weight


@given(st.lists(st.integers(1, 6), min_size=1, max_size=30))
def test_weight_vector_roundtrip_and_classes(ws):
    pi = WeightVector(tuple(ws))
    assert WeightVector.parse(pi.serialize()) == pi
    assert sum(pi.sizes.values()) == pi.n
    union = set()
    for i, cls in pi.classes.items():
        assert not union & cls
        union |= cls
        assert all(pi.weights[p - 1] == i for p in cls)
    assert union == set(range(1, pi.n + 1))


def test_weight_vector_rejects_nonpositive():
    with pytest.raises(ValueError):
        WeightVector((1, 0, 2))


def test_all_ones_weight_is_hamming_weight():
    pi = WeightVector.ones(10)
    for bits in range(1 << 10):
        assert pi.weight(bits) == bin(bits).count("1")


def test_weight_table_matches_scalar():
    pi = WeightVector((1, 3, 2, 2, 4))
    table = pi.weight_table()
    assert [pi.weight(x) for x in range(32)] == table.tolist()
    assert pi.weights_array(np.arange(32)).tolist() == table.tolist()


def test_weight_table_respects_cap(monkeypatch):
    monkeypatch.setenv("PIPERFECT_MAX_N", "4")
    with pytest.raises(InstanceTooLarge):
        WeightVector.ones(5).weight_table()


def test_two_valued_profile():
    p = TwoValuedProfile(6, 2)
    assert p.t == 3
    assert p.head_mask == 0b11
    assert p.weight_vector().weights == (1, 1, 2, 2, 2, 2)
    assert TwoValuedProfile.from_tm(4, 3) == TwoValuedProfile(12, 3)
    with pytest.raises(InfeasibleParameters):
        TwoValuedProfile(7, 2)
    with pytest.raises(InfeasibleParameters):
        TwoValuedProfile.from_tm(4, 5)


def test_matrix_roundtrip(example_H):
    assert LinearCode.parse(example_H.serialize()) == example_H
    assert example_H.columns == (1, 2, 4, 5, 6, 7)
    assert LinearCode.from_columns(example_H.columns, 3) == example_H


def test_matrix_rejects_ragged_rows():
    with pytest.raises(LengthMismatch):
        LinearCode.parse("101\n11\n")


def test_code_file_roundtrip(example_code):
    again = ExplicitCode.parse(example_code.serialize())
    assert again == example_code
    assert ExplicitCode.parse("11\n11\n00\n") == ExplicitCode(2, [0, 3])


def test_enumerate_example(example_H):
    code = enumerate_codewords(example_H)
    assert set(code.strings()) == {
        "000000", "001111", "101100", "100011", "011010", "010101", "111001", "110110"
    }
    assert list(code) == sorted(code)


def test_enumerate_identity_check_matrix():
    H = LinearCode.from_columns([1, 2, 4], 3)
    assert list(enumerate_codewords(H)) == [0]


def test_enumerate_hamming_3_against_scan():
    H = build(3).code
    code = enumerate_codewords(H)
    # oracle: membership scan over all of F_2^7
    scanned = [x for x in range(128) if x in H]
    assert list(code) == scanned
    assert len(code) == 16
    assert {bin(c).count("1") for c in code} == {0, 3, 4, 7}


def test_enumerate_dimension_cap():
    H = LinearCode(30, (1,))
    with pytest.raises(InstanceTooLarge):
        enumerate_codewords(H)


@given(st.integers(1, 12).flatmap(
    lambda n: st.tuples(st.just(n), st.lists(st.integers(0, 2**n - 1), max_size=8))))
def test_enumeration_size_and_closure(data):
    n, rows = data
    H = LinearCode(n, tuple(rows))
    code = enumerate_codewords(H)
    assert len(code) == 2 ** (n - rank(rows))
    words = set(code)
    assert all(a ^ b in words for a in list(words)[:16] for b in words)
    assert all(w in H for w in words)


def test_linear_detection_and_dual(example_code, example_H):
    assert example_code.is_linear()
    dual = example_code.to_linear()
    assert dual.enumerate() == example_code
    assert not ExplicitCode(3, [0, 1, 2]).is_linear()


def test_translate(example_code):
    assert example_code.translate(BitWord.parse("001111")) == example_code
