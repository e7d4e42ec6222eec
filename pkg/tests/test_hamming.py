from itertools import combinations

import pytest

from piperfect.core import enumerate_codewords, positions_to_bits
from piperfect.hamming import EXTENDED, build, delete_parity, fourth_point, third_point


def min_distance(code):
    return min(bin(c).count("1") for c in code if c)


def test_h2_columns_and_code():
    fam = build(2)
    assert fam.code.serialize().split() == ["101", "011"]
    assert fam.code.columns == (1, 2, 3)
    assert enumerate_codewords(fam.code).strings() == ["000", "111"]


def test_extended_m2_is_repetition():
    fam = build(2, EXTENDED)
    assert enumerate_codewords(fam.code).strings() == ["0000", "1111"]


@pytest.mark.parametrize("m", [2, 3, 4])
def test_parameters(m):
    std, ext = build(m), build(m, EXTENDED)
    c, e = enumerate_codewords(std.code), enumerate_codewords(ext.code)
    assert std.code.n == 2**m - 1 and ext.code.n == 2**m
    assert len(c) == len(e) == 2 ** (2**m - 1 - m)
    assert min_distance(c) == 3 and min_distance(e) == 4
    assert all(bin(w).count("1") % 2 == 0 for w in e)


def test_h3_is_the_7_4_code():
    assert len(enumerate_codewords(build(3).code)) == 16


@pytest.mark.parametrize("m", [2, 3, 4, 5])
def test_deleting_parity_row_and_zero_column_gives_hamming(m):
    ext = build(m, EXTENDED)
    assert ext.code.columns[-1] == 1  # all-ones row bit only
    assert delete_parity(ext) == build(m).code


def test_build_range():
    with pytest.raises(ValueError):
        build(1)
    with pytest.raises(ValueError):
        build(21)


def test_third_point():
    assert third_point(1, 2, 2) == 3
    assert third_point(4, 8, 4) == 12
    with pytest.raises(ValueError):
        third_point(3, 3, 3)


@pytest.mark.parametrize("m", [2, 3, 4])
def test_every_third_point_is_a_codeword(m):
    H = build(m).code
    n = H.n
    triples = set()
    for a, b in combinations(range(1, n + 1), 2):
        c = third_point(a, b, m)
        assert positions_to_bits({a, b, c}) in H
        triples.add(frozenset((a, b, c)))
    assert len(triples) == (2**m - 1) * (2**m - 2) // 6
    weight3 = [w for w in enumerate_codewords(H) if bin(w).count("1") == 3]
    assert len(weight3) == len(triples)


def test_fourth_point_m2():
    assert fourth_point(1, 2, 3, 2) == 4


@pytest.mark.parametrize("m", [3, 4])
def test_fourth_point_completes_codewords(m):
    H = build(m, EXTENDED).code
    n = H.n
    for a, b, c in combinations(range(1, n + 1), 3):
        d = fourth_point(a, b, c, m)
        assert d not in (a, b, c)
        assert positions_to_bits({a, b, c, d}) in H
        assert fourth_point(c, a, b, m) == fourth_point(b, c, a, m) == d


def test_fourth_point_rejects_repeats():
    with pytest.raises(ValueError):
        fourth_point(1, 1, 2, 3)
